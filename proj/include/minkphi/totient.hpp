#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minkphi/bound_report.hpp"
#include "minkphi/enclosure.hpp"

namespace minkphi {

/// Sieved Euler phi for 1 <= m <= limit, plus the inverse map
/// d -> max{m <= limit : phi(m) = d}. Immutable after construction.
class TotientTable {
public:
    explicit TotientTable(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }
    std::uint32_t phi(std::uint32_t m) const { return phi_[m]; }

    /// Largest m <= limit with phi(m) = d, if any (nontotients have none).
    std::optional<std::uint32_t> max_preimage(std::uint32_t d) const {
        if (d > limit_ || inverse_max_[d] == 0) return std::nullopt;
        return inverse_max_[d];
    }

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> phi_;
    std::vector<std::uint32_t> inverse_max_;
};

/// Largest e with p^e | n. p must be prime, n >= 1.
std::uint32_t p_adic_valuation(std::uint64_t n, std::uint64_t p);

/// phi(m) by trial-division factorization (single queries).
std::uint64_t euler_phi(std::uint64_t m);

/// The certified search ceiling 2n * prod_{i=1..t} p_i/(p_i-1) with
/// t = nu_2(n) + 2, exact.
mpq_class phi_search_bound(std::uint64_t n);

/// Phi(n) = max{m : phi(m) | 2n} by downward scan from the search ceiling.
/// The overload taking a TotientTable reuses its sieved phi values (the
/// table must cover the ceiling); the other sieves its own scratch table.
std::uint64_t phi_of(std::uint64_t n);
std::uint64_t phi_of(std::uint64_t n, const TotientTable& table);

/// Phi(1..n_max) via the inverse-totient table: Phi(n) is the max of
/// max_preimage(d) over divisors d of 2n. Sieve ceiling is the exact
/// rational max of the per-n search bounds.
std::vector<std::uint64_t> phi_bulk(std::uint64_t n_max);

/// Exact ceiling the bulk computation sieves to.
std::uint64_t phi_bulk_ceiling(std::uint64_t n_max);

/// Piecewise upper bound for even n:
///   16 does not divide n:  9.625 n
///   16 | n:  2 n e^gamma (1 + 1/(log t' + log log t')^2)
///                        (log t' + log(log t' + log log t'))
/// with t' = log2(n) + 2 as a real enclosure. Odd n is a domain error.
Enclosure phi_upper_theorem2(std::uint64_t n, mpfr_prec_t prec = kPrecDefault);

/// The derivative numerator c(t) whose positivity makes the 16|n bound
/// increasing in t; domain t >= 6.
Enclosure c_function(const Enclosure& t);

/// Phi(n) < 6.49 n log log n for n >= 3; expected to fail exactly on
/// S = {3,4,5,6,8,9,10,12,16,18,20,24} within [3, 24]. n <= 2 is a
/// domain error (log log out of domain; 1 and 2 sit in S regardless).
BoundReport loglog_bound_check(std::uint64_t n);
BoundReport loglog_bound_check(std::uint64_t n, std::uint64_t phi_n);

/// The exception set of the log log bound.
const std::vector<std::uint64_t>& loglog_exception_set();

/// With n = phi(q#)/2 (n = 1 for q <= 3): certifies Phi(n) >= q#,
/// Phi(n)/n >= 2 prod_{p<=q} p/(p-1) (exact; equality flagged), and the
/// Mertens-type lower bound on the product. q must be prime.
BoundReport primorial_family_check(std::uint64_t q);

}  // namespace minkphi
