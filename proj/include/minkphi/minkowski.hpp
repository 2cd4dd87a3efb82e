#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minkphi/bound_report.hpp"
#include "minkphi/enclosure.hpp"

namespace minkphi {

/// Factored form of G(n): prime q -> exponent r(q), primes with r(q) = 0
/// absent. Sorted by q ascending.
struct GExponents {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> exponents;
};

/// r(q) for G(n):
///   r(2) = floor(n/2) + sum_{j>=0} floor(n/2^j)
///   r(q) = sum_{j>=0} floor(n/(q^j(q-1)))   for odd q.
/// Zero when q > n+1. q must be prime.
std::uint64_t minkowski_exponent(std::uint64_t n, std::uint64_t q);

/// G(n) = prod over primes q <= n+1 of q^r(q), both factored and expanded.
std::pair<GExponents, mpz_class> g_exact(std::uint64_t n);

/// H(n) = G(2n) / 2^(n-1), exact (the division is asserted exact).
mpz_class h_exact(std::uint64_t n);

/// Exponent of prime q in n! (Legendre).
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t q);

/// Robbins' two-sided Stirling form:
/// log n! in [log sqrt(2 pi) + (n + 1/2) log n - n + 1/(12n+1), ... + 1/(12n)].
Enclosure log_factorial_enclosure(std::uint64_t n, mpfr_prec_t prec = kPrecDefault);

/// Enclosure of log G(n) for n >= 2, computed two ways — as
/// sum r(q) log q over the factorization, and via the regrouped identity
/// floor(n/2) log 2 + sum_j floor(n/2^j) log 2 + sum over odd primes q <= n
/// of log q sum_j floor(n/(q^j(q-1))) plus log(n+1) when n+1 is prime —
/// and intersected. Throws logic_error if the two paths ever disagree.
Enclosure log_g(std::uint64_t n, mpfr_prec_t prec = kPrecDefault);

/// Both sides of the explicit two-sided bound on
/// log G(n) - [n log n + n((3/2)log 2 - 1 + K)], evaluated literally,
/// term by term, with K passed as an enclosure.
///   lower = -(1/2)sqrt(n)log n - 4 sqrt(n) - 7 sqrt(n)/log n - (5/4)log n
///           + (1/2)log 2 + log sqrt(2 pi) - K - 13/4 - 1/log n
///           - log n/(4 sqrt n) - 1/(4 sqrt n) + 1/(12n+1)
///   upper = (1/2)sqrt(n)log n + 4 sqrt(n) + 7 sqrt(n)/log n + (1/2)log n
///           + 3 + log sqrt(2 pi) - log 2 - 0.1250281 + 1/log n + 1/(12n)
/// lower_relaxed drops the final +1/(12n+1) term of lower (the L_G variant
/// used by the threshold arguments); it is still a valid lower bound.
struct Theorem1Bounds {
    Enclosure lower;
    Enclosure lower_relaxed;
    Enclosure upper;
    Enclosure main;  // n log n + n((3/2)log 2 - 1 + K)
};
Theorem1Bounds theorem1_bounds(std::uint64_t n, mpfr_prec_t prec = kPrecDefault);

/// The log H(n) analogue around 2n log n + n(4 log 2 - 2 + 2K); equals the
/// G-side bounds at 2n shifted by log 2 (checked in tests).
struct CorollaryHBounds {
    Enclosure lower;
    Enclosure lower_relaxed;
    Enclosure upper;
    Enclosure main;  // 2n log n + n(4 log 2 - 2 + 2K)
};
CorollaryHBounds corollary_h_bounds(std::uint64_t n, mpfr_prec_t prec = kPrecDefault);

/// The four closed-form bounds:
///   eq3: |log G(n) - main_G(n)| <= (3/2) sqrt(n) log n          (n >= 2)
///   eq4: |log H(n) - main_H(n)| <= (6/5) sqrt(2n) log 2n        (n >= 2)
///   eq5: G(n) <= (2 sqrt(3) n)^n                                (n >= 1)
///   eq6: H(n) <= 2 ((4 sqrt 3/sqrt 2) n)^(2n)                   (n >= 1)
/// eq5/eq6 are compared in log space; ties are settled by the exact
/// integer forms (12 n^2)^(n/2) and 2 (24 n^2)^n and flagged "equality".
/// For n = 1 only eq5/eq6 are emitted.
std::vector<BoundReport> nice_bounds_check(std::uint64_t n);

/// Certifies log G(n) < n log(6.31 n) (the coarser published bound) for
/// n >= 1, plus the constant comparison 2 sqrt 3 < 6.31 that makes the
/// (2 sqrt 3 n)^n bound uniformly sharper.
BoundReport silverberg_comparison(std::uint64_t n);

/// Proof-level decomposition of log G(n): the exact pieces f1, f2 (via
/// Robbins), and S1..S8 of the prime-power regrouping, with
/// main_term + residual enclosing log G(n) by construction.
struct LogDecomposition {
    std::uint64_t n = 0;
    Enclosure main_term;
    Enclosure residual;
    std::vector<std::pair<std::string, Enclosure>> pieces;
};
LogDecomposition decompose_log_g(std::uint64_t n, mpfr_prec_t prec = kPrecDefault);

}  // namespace minkphi
