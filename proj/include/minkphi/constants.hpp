#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "minkphi/bound_report.hpp"
#include "minkphi/enclosure.hpp"

namespace minkphi {

/// A named certified constant together with how it was derived, so the
/// numbers can be audited without rerunning anything.
struct ConstantEnclosure {
    std::string name;
    Enclosure value;
    std::uint64_t cutoff = 0;      // prime cutoff of the partial sum
    Enclosure partial_sum;         // sum over 2 < q <= cutoff
    Enclosure tail;                // certified tail enclosure
    Enclosure tail_integral_upper; // the coarse closed-form integral upper bound
    std::string derivation;
};

/// K = sum over odd primes q of log q / (q-1)^2.
///
/// The partial sum runs over 2 < q <= Q in outward-rounded arithmetic.
/// The tail over q > Q is enclosed by Abel summation against the
/// Chebyshev bounds theta(x) <> x(1 -+ 1/(2 log x)) (valid for x >= 563):
///   tail = -theta(Q)/(Q-1)^2 + 2*c*(1/(Q-1) + 1/(2(Q-1)^2)),
///   c in [1 - 1/(2 log Q), 1 + 1/(2 log Q)],
/// which keeps the enclosure width ~ 2/((Q-1) log Q). The plain integral
/// bound int_Q^inf log t/(t-1)^2 dt is also evaluated and recorded; it is
/// a valid upper bound but ~100x wider, so it only serves as a cross-check
/// (tail.hi <= integral bound is asserted).
ConstantEnclosure k_enclosure(std::uint64_t cutoff = 1000000,
                              mpfr_prec_t prec = 128);

/// Cached K at the requested working precision (master evaluation at
/// 320 bits, cutoff 1e6, rounded outward). Raising prec never widens.
Enclosure k_constant(mpfr_prec_t prec = kPrecDefault);

/// Certifies sum over 2 < q <= 1000 of log q/(q(q-1)^2) > 0.1250281.
BoundReport partial_sum_check(mpfr_prec_t prec = 128);

/// Main-term coefficients: d_g = (3/2)log 2 - 1 + K and
/// d_h = 4 log 2 - 2 + 2K.
std::pair<Enclosure, Enclosure> main_coefficients(mpfr_prec_t prec = kPrecDefault);

}  // namespace minkphi
