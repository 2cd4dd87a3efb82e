#include "minkphi/constants.hpp"

#include <mutex>
#include <stdexcept>

#include "minkphi/primes.hpp"

namespace minkphi {

ConstantEnclosure k_enclosure(std::uint64_t cutoff, mpfr_prec_t prec) {
    if (cutoff < 1000)
        throw std::domain_error("k_enclosure: cutoff must be >= 1000");

    // One pass over the sieve accumulates both the partial sum and
    // theta(Q); each log q is evaluated once.
    Enclosure partial = Enclosure::exact(0L, prec);
    Enclosure theta_q = Enclosure::exact(0L, prec);
    PrimeSieve sieve(cutoff);
    sieve.for_each_prime([&](std::uint64_t q) {
        Enclosure lq = log(Enclosure::exact(static_cast<long>(q), prec));
        theta_q = theta_q + lq;
        if (q > 2) {
            mpz_class qm1sq = mpz_class(static_cast<unsigned long>(q - 1));
            qm1sq *= qm1sq;
            partial = partial + lq / Enclosure::exact(qm1sq, prec);
        }
    });

    // Tail over primes q > Q by Abel summation:
    //   tail = -theta(Q)/(Q-1)^2 + 2c * (1/(Q-1) + 1/(2(Q-1)^2)),
    // with theta(t) between t(1 -+ 1/(2 log t)) for t >= 563, so
    // c in [1 - 1/(2 log Q), 1 + 1/(2 log Q)].
    mpz_class qm1(static_cast<unsigned long>(cutoff - 1));
    mpq_class integral_exact(mpz_class(2 * mpz_class(static_cast<unsigned long>(cutoff)) - 1),
                             2 * qm1 * qm1);  // 1/(Q-1) + 1/(2(Q-1)^2)
    integral_exact.canonicalize();
    Enclosure lq_cut = log(Enclosure::exact(static_cast<long>(cutoff), prec));
    Enclosure u = 1 / (2 * lq_cut);
    Enclosure c = Enclosure::hull(1 - u, 1 + u);
    Enclosure tail = 2 * c * Enclosure::exact(integral_exact, prec) -
                     theta_q / Enclosure::exact(mpz_class(qm1 * qm1), prec);

    // Coarse closed-form upper bound int_Q^inf log t/(t-1)^2 dt, recorded
    // for audit; the Abel tail must sit below it.
    Enclosure q_enc = Enclosure::exact(static_cast<long>(cutoff), prec);
    Enclosure integral_upper = lq_cut / (q_enc - 1) + log(q_enc / (q_enc - 1));
    if (mpfr_cmp(tail.hi_raw(), integral_upper.hi_raw()) > 0)
        throw std::logic_error("k_enclosure: tail exceeds the integral cross-check");

    ConstantEnclosure out;
    out.name = "K";
    out.cutoff = cutoff;
    out.partial_sum = partial;
    out.tail = tail;
    out.tail_integral_upper = integral_upper;
    out.value = partial + tail;
    out.derivation =
        "partial sum over 2<q<=Q plus Abel-summation tail against the "
        "Chebyshev theta bounds theta(t) in t(1 -+ 1/(2 log t)), t >= 563";
    return out;
}

Enclosure k_constant(mpfr_prec_t prec) {
    // The 4e6 cutoff keeps the tail enclosure near 3e-8 wide, which the
    // derived main-term coefficients need; single evaluations go through
    // k_enclosure with the default 1e6 cutoff instead.
    static Enclosure master = [] {
        return k_enclosure(4000000, 384).value;
    }();
    if (prec > 384) return k_enclosure(4000000, prec).value;
    return master.rounded_to(prec);
}

BoundReport partial_sum_check(mpfr_prec_t prec) {
    Enclosure sum = Enclosure::exact(0L, prec);
    PrimeSieve sieve(1000);
    sieve.for_each_prime([&](std::uint64_t q) {
        if (q <= 2) return;
        mpz_class den = mpz_class(static_cast<unsigned long>(q - 1));
        den *= den;
        den *= static_cast<unsigned long>(q);
        sum = sum + log(Enclosure::exact(static_cast<long>(q), prec)) /
                        Enclosure::exact(den, prec);
    });
    BoundReport rep;
    rep.campaign = "partial_sum_check";
    rep.n = 1000;
    rep.lhs = Enclosure::exact(mpq_class(1250281, 10000000), prec);
    rep.rhs = sum;
    rep.precision_used = prec;
    switch (compare(rep.lhs, rep.rhs)) {
        case Cmp::LessCertain: rep.status = BoundStatus::Holds; break;
        case Cmp::GreaterCertain: rep.status = BoundStatus::Fails; break;
        default: rep.status = BoundStatus::Inconclusive; break;
    }
    return rep;
}

std::pair<Enclosure, Enclosure> main_coefficients(mpfr_prec_t prec) {
    Enclosure k = k_constant(prec);
    Enclosure l2 = log2_enclosure(prec);
    Enclosure d_g = rational(3, 2, prec) * l2 - 1 + k;
    Enclosure d_h = 4 * l2 - 2 + 2 * k;
    return {d_g, d_h};
}

}  // namespace minkphi
