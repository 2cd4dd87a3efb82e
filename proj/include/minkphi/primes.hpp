#pragma once

#include <cstdint>
#include <vector>

#include "minkphi/bound_report.hpp"
#include "minkphi/enclosure.hpp"

namespace minkphi {

/// Eratosthenes bitmap up to `limit`. Immutable after construction and
/// safe to share across threads. Limits in this project stay below ~2e6,
/// so no segmentation.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t m) const { return m <= limit_ && bits_[m]; }

    /// pi(x) for x <= limit.
    std::uint64_t count_up_to(std::uint64_t x) const;

    template <typename Fn>
    void for_each_prime(Fn&& fn) const {
        for (std::uint64_t p = 2; p <= limit_; ++p)
            if (bits_[p]) fn(p);
    }

    std::vector<std::uint64_t> primes() const;

private:
    std::uint64_t limit_;
    std::vector<bool> bits_;
};

PrimeSieve primes_up_to(std::uint64_t limit);        // limit >= 2

std::uint64_t nth_prime(std::uint64_t i);            // i >= 1, p_1 = 2

std::uint64_t prime_count(std::uint64_t x);          // exact pi(x)

bool is_prime_u64(std::uint64_t n);                  // trial division

/// Chebyshev theta(x) = sum of log p over primes p <= x, as an enclosure.
Enclosure chebyshev_theta(std::uint64_t x, mpfr_prec_t prec = kPrecDefault);

/// Product of all primes <= k, exact. k >= 2.
mpz_class primorial(std::uint64_t k);

/// prod_{i=1..t} p_i/(p_i - 1), exact.
mpq_class prime_product_ratio(std::uint64_t t);

/// prod_{p<=q} p/(p-1) > e^gamma * log q * (1 - 1/(2 log^2 q)).
/// Mertens-type lower bound; q must be prime.
BoundReport mertens_lower(std::uint64_t q);

/// theta(x) < x(1 + 1/(2 log x)) for x >= 2.
BoundReport theta_upper_check(std::uint64_t x);

/// pi(x) < (x/log x)(1 + 3/(2 log x)) for x >= 2.
BoundReport pi_upper_check(std::uint64_t x);

}  // namespace minkphi
