#include "minkphi/minkowski.hpp"

#include <stdexcept>

#include "minkphi/constants.hpp"
#include "minkphi/primes.hpp"

namespace minkphi {

namespace {

// r(q) without the primality re-check; q is a sieve prime.
std::uint64_t r_of(std::uint64_t n, std::uint64_t q) {
    if (q > n + 1) return 0;
    std::uint64_t s = 0;
    if (q == 2) {
        s = n / 2;
        for (std::uint64_t x = n; x > 0; x >>= 1) s += x;
        return s;
    }
    // sum of floor(n / (q^j (q-1))); terms vanish once the divisor passes n
    for (std::uint64_t d = q - 1; d <= n;) {
        s += n / d;
        if (d > n / q) break;
        d *= q;
    }
    return s;
}

GExponents g_exponents(std::uint64_t n) {
    GExponents ge;
    ge.n = n;
    PrimeSieve sieve(n + 1);
    sieve.for_each_prime([&](std::uint64_t q) {
        std::uint64_t r = r_of(n, q);
        if (r > 0) ge.exponents.emplace_back(q, r);
    });
    return ge;
}

Enclosure log_prime(std::uint64_t q, mpfr_prec_t prec) {
    return log(Enclosure::exact(static_cast<long>(q), prec));
}

}  // namespace

std::uint64_t minkowski_exponent(std::uint64_t n, std::uint64_t q) {
    if (n < 1) throw std::domain_error("minkowski_exponent: n must be >= 1");
    if (!is_prime_u64(q)) throw std::domain_error("minkowski_exponent: q must be prime");
    return r_of(n, q);
}

std::pair<GExponents, mpz_class> g_exact(std::uint64_t n) {
    if (n < 1) throw std::domain_error("g_exact: n must be >= 1");
    GExponents ge = g_exponents(n);
    mpz_class g = 1;
    mpz_class power;
    for (auto [q, r] : ge.exponents) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(r));
        g *= power;
    }
    return {std::move(ge), std::move(g)};
}

mpz_class h_exact(std::uint64_t n) {
    if (n < 1) throw std::domain_error("h_exact: n must be >= 1");
    mpz_class g2n = g_exact(2 * n).second;
    if (!mpz_divisible_2exp_p(g2n.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1)))
        throw std::logic_error("h_exact: G(2n) not divisible by 2^(n-1)");
    mpz_class h;
    mpz_tdiv_q_2exp(h.get_mpz_t(), g2n.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
    return h;
}

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t q) {
    if (!is_prime_u64(q)) throw std::domain_error("legendre_valuation: q must be prime");
    std::uint64_t s = 0;
    for (std::uint64_t d = q; d <= n;) {
        s += n / d;
        if (d > n / q) break;
        d *= q;
    }
    return s;
}

Enclosure log_factorial_enclosure(std::uint64_t n, mpfr_prec_t prec) {
    if (n < 1) throw std::domain_error("log_factorial_enclosure: n must be >= 1");
    Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
    Enclosure base = log_sqrt_2pi(prec) +
                     (en + rational(1, 2, prec)) * log(en) - en;
    Enclosure r_lo = Enclosure::exact(
        mpq_class(1, mpz_class(12 * mpz_class(static_cast<unsigned long>(n)) + 1)), prec);
    Enclosure r_hi = Enclosure::exact(
        mpq_class(1, mpz_class(12 * mpz_class(static_cast<unsigned long>(n)))), prec);
    return Enclosure::hull(base + r_lo, base + r_hi);
}

Enclosure log_g(std::uint64_t n, mpfr_prec_t prec) {
    if (n < 2) throw std::domain_error("log_g: n must be >= 2");

    // Path 1: sum r(q) log q over the factorization.
    Enclosure by_factors = Enclosure::exact(0L, prec);
    GExponents ge = g_exponents(n);
    for (auto [q, r] : ge.exponents)
        by_factors = by_factors + static_cast<long>(r) * log_prime(q, prec);

    // Path 2: the regrouped identity, with the q = 2 pieces separate and
    // the log(n+1) term appended only when n+1 is prime.
    Enclosure l2 = log2_enclosure(prec);
    std::uint64_t pow2_sum = 0;
    for (std::uint64_t x = n; x > 0; x >>= 1) pow2_sum += x;
    Enclosure by_identity =
        Enclosure::exact(static_cast<long>(n / 2), prec) * l2 +
        Enclosure::exact(static_cast<long>(pow2_sum), prec) * l2;
    PrimeSieve sieve(n + 1);
    sieve.for_each_prime([&](std::uint64_t q) {
        if (q <= 2 || q > n) return;
        std::uint64_t s = 0;
        for (std::uint64_t d = q - 1; d <= n;) {
            s += n / d;
            if (d > n / q) break;
            d *= q;
        }
        by_identity = by_identity + static_cast<long>(s) * log_prime(q, prec);
    });
    if (sieve.is_prime(n + 1)) by_identity = by_identity + log_prime(n + 1, prec);

    auto meet = Enclosure::intersection(by_factors, by_identity);
    if (!meet)
        throw std::logic_error("log_g: factorization and identity paths disagree");
    return *meet;
}

Theorem1Bounds theorem1_bounds(std::uint64_t n, mpfr_prec_t prec) {
    if (n < 2) throw std::domain_error("theorem1_bounds: n must be >= 2");
    Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
    Enclosure sn = sqrt(en);
    Enclosure ln = log(en);
    Enclosure l2 = log2_enclosure(prec);
    Enclosure lsp = log_sqrt_2pi(prec);
    Enclosure k = k_constant(prec);
    Enclosure half = rational(1, 2, prec);
    Enclosure r12n1 = Enclosure::exact(
        mpq_class(1, mpz_class(12 * mpz_class(static_cast<unsigned long>(n)) + 1)), prec);
    Enclosure r12n = Enclosure::exact(
        mpq_class(1, mpz_class(12 * mpz_class(static_cast<unsigned long>(n)))), prec);

    Theorem1Bounds b;
    b.lower_relaxed = -(half * sn * ln) - 4 * sn - 7 * sn / ln -
                      rational(5, 4, prec) * ln + half * l2 + lsp - k -
                      rational(13, 4, prec) - 1 / ln - ln / (4 * sn) -
                      1 / (4 * sn);
    b.lower = b.lower_relaxed + r12n1;
    b.upper = half * sn * ln + 4 * sn + 7 * sn / ln + half * ln + 3 + lsp -
              l2 - Enclosure::exact(mpq_class(1250281, 10000000), prec) +
              1 / ln + r12n;
    b.main = en * ln + en * (rational(3, 2, prec) * l2 - 1 + k);
    return b;
}

CorollaryHBounds corollary_h_bounds(std::uint64_t n, mpfr_prec_t prec) {
    if (n < 2) throw std::domain_error("corollary_h_bounds: n must be >= 2");
    Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
    Enclosure e2n = Enclosure::exact(static_cast<long>(2 * n), prec);
    Enclosure s2n = sqrt(e2n);
    Enclosure l2n = log(e2n);
    Enclosure ln = log(en);
    Enclosure l2 = log2_enclosure(prec);
    Enclosure lsp = log_sqrt_2pi(prec);
    Enclosure k = k_constant(prec);
    Enclosure half = rational(1, 2, prec);
    Enclosure r24n1 = Enclosure::exact(
        mpq_class(1, mpz_class(24 * mpz_class(static_cast<unsigned long>(n)) + 1)), prec);
    Enclosure r24n = Enclosure::exact(
        mpq_class(1, mpz_class(24 * mpz_class(static_cast<unsigned long>(n)))), prec);

    CorollaryHBounds b;
    b.lower_relaxed = -(half * s2n * l2n) - 4 * s2n - 7 * s2n / l2n -
                      rational(5, 4, prec) * l2n + rational(3, 2, prec) * l2 +
                      lsp - k - rational(13, 4, prec) - 1 / l2n -
                      l2n / (4 * s2n) - 1 / (4 * s2n);
    b.lower = b.lower_relaxed + r24n1;
    b.upper = half * s2n * l2n + 4 * s2n + 7 * s2n / l2n + half * l2n + 3 +
              lsp - Enclosure::exact(mpq_class(1250281, 10000000), prec) +
              1 / l2n + r24n;
    b.main = 2 * en * ln + en * (4 * l2 - 2 + 2 * k);
    return b;
}

namespace {

Enclosure log_g_any(std::uint64_t n, mpfr_prec_t prec) {
    if (n >= 2) return log_g(n, prec);
    return log(Enclosure::exact(g_exact(n).second, prec));
}

Enclosure log_h(std::uint64_t n, mpfr_prec_t prec) {
    return log_g(2 * n, prec) -
           Enclosure::exact(static_cast<long>(n - 1), prec) * log2_enclosure(prec);
}

// Exact-integer settlement of G(n) <= (2 sqrt(3) n)^n for even n, where the
// right side is the integer (12 n^2)^(n/2).
BoundReport settle_eq5_exact(BoundReport rep, std::uint64_t n) {
    if (n % 2 != 0) return rep;
    mpz_class base = 12 * mpz_class(static_cast<unsigned long>(n));
    base *= static_cast<unsigned long>(n);
    mpz_class rhs;
    mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n / 2));
    mpz_class lhs = g_exact(n).second;
    if (lhs == rhs) {
        rep.status = BoundStatus::Holds;
        rep.note = "equality";
    } else if (lhs < rhs) {
        rep.status = BoundStatus::Holds;
        rep.note = "exact";
    } else {
        rep.status = BoundStatus::Fails;
        rep.note = "exact";
    }
    return rep;
}

// Same for H(n) <= 2 (24 n^2)^n, exact at every n.
BoundReport settle_eq6_exact(BoundReport rep, std::uint64_t n) {
    mpz_class base = 24 * mpz_class(static_cast<unsigned long>(n));
    base *= static_cast<unsigned long>(n);
    mpz_class rhs;
    mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    rhs *= 2;
    mpz_class lhs = h_exact(n);
    if (lhs == rhs) {
        rep.status = BoundStatus::Holds;
        rep.note = "equality";
    } else if (lhs < rhs) {
        rep.status = BoundStatus::Holds;
        rep.note = "exact";
    } else {
        rep.status = BoundStatus::Fails;
        rep.note = "exact";
    }
    return rep;
}

}  // namespace

std::vector<BoundReport> nice_bounds_check(std::uint64_t n) {
    if (n < 1) throw std::domain_error("nice_bounds_check: n must be >= 1");
    std::vector<BoundReport> out;

    if (n >= 2) {
        out.push_back(certify_less("nice_eq3", static_cast<long long>(n), [&](mpfr_prec_t prec) {
            Theorem1Bounds b = theorem1_bounds(n, prec);
            Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
            Enclosure rhs = rational(3, 2, prec) * sqrt(en) * log(en);
            return std::pair{abs(log_g(n, prec) - b.main), rhs};
        }));
        out.push_back(certify_less("nice_eq4", static_cast<long long>(n), [&](mpfr_prec_t prec) {
            CorollaryHBounds b = corollary_h_bounds(n, prec);
            Enclosure e2n = Enclosure::exact(static_cast<long>(2 * n), prec);
            Enclosure rhs = rational(6, 5, prec) * sqrt(e2n) * log(e2n);
            return std::pair{abs(log_h(n, prec) - b.main), rhs};
        }));
    }

    BoundReport eq5 = certify_less("nice_eq5", static_cast<long long>(n), [&](mpfr_prec_t prec) {
        Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
        Enclosure rhs = en * (log(en) + log(2 * sqrt(Enclosure::exact(3L, prec))));
        return std::pair{log_g_any(n, prec), rhs};
    });
    if (eq5.status == BoundStatus::Inconclusive) eq5 = settle_eq5_exact(std::move(eq5), n);
    out.push_back(std::move(eq5));

    BoundReport eq6 = certify_less("nice_eq6", static_cast<long long>(n), [&](mpfr_prec_t prec) {
        Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
        Enclosure rhs = log2_enclosure(prec) +
                        2 * en * (log(en) + log(2 * sqrt(Enclosure::exact(6L, prec))));
        return std::pair{log_h(n, prec), rhs};
    });
    if (eq6.status == BoundStatus::Inconclusive) eq6 = settle_eq6_exact(std::move(eq6), n);
    out.push_back(std::move(eq6));

    return out;
}

BoundReport silverberg_comparison(std::uint64_t n) {
    if (n < 1) throw std::domain_error("silverberg_comparison: n must be >= 1");
    BoundReport rep;
    rep.campaign = "silverberg";
    rep.n = static_cast<long long>(n);
    for (mpfr_prec_t prec : kPrecLadder) {
        Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
        Enclosure lhs = log_g_any(n, prec);
        Enclosure rhs = en * log(rational(631, 100, prec) * en);
        Cmp main_cmp = compare(lhs, rhs);
        Cmp const_cmp = compare(2 * sqrt(Enclosure::exact(3L, prec)),
                                rational(631, 100, prec));
        rep.lhs = std::move(lhs);
        rep.rhs = std::move(rhs);
        rep.precision_used = prec;
        if (main_cmp == Cmp::GreaterCertain || const_cmp == Cmp::GreaterCertain) {
            rep.status = BoundStatus::Fails;
            return rep;
        }
        if (main_cmp == Cmp::LessCertain && const_cmp == Cmp::LessCertain) {
            rep.status = BoundStatus::Holds;
            return rep;
        }
    }
    rep.status = BoundStatus::Inconclusive;
    return rep;
}

LogDecomposition decompose_log_g(std::uint64_t n, mpfr_prec_t prec) {
    if (n < 2) throw std::domain_error("decompose_log_g: n must be >= 2");
    LogDecomposition d;
    d.n = n;

    Enclosure logG = log_g(n, prec);
    Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
    Enclosure ln = log(en);
    Enclosure l2 = log2_enclosure(prec);
    d.main_term = en * ln + en * (rational(3, 2, prec) * l2 - 1 + k_constant(prec));
    d.residual = logG - d.main_term;

    PrimeSieve sieve(n + 1);

    // f1 = (floor(n/2) - n/2) log 2  [+ log(n+1) when n+1 is prime]
    Enclosure f1 = Enclosure::exact(mpq_class(static_cast<long>(n / 2), 1) -
                                        mpq_class(static_cast<long>(n), 2),
                                    prec) * l2;
    if (sieve.is_prime(n + 1)) f1 = f1 + log_prime(n + 1, prec);

    // f2 = log n! - n log n + n, enclosed via Robbins
    Enclosure f2 = log_factorial_enclosure(n, prec) - (en * ln - en);

    auto frac = [](const mpq_class& x) {  // {x} for x >= 0
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        return mpq_class(x - mpq_class(fl));
    };

    Enclosure s1 = Enclosure::exact(0L, prec), s2 = s1, s3 = s1, s4 = s1,
              s5 = s1, s6 = s1, s7 = s1, s8 = s1;

    sieve.for_each_prime([&](std::uint64_t q) {
        if (q <= 2 || q > n) return;
        Enclosure lq = log_prime(q, prec);
        long qs = static_cast<long>(q);

        // c(n,q) = floor(log_q n)
        int c = 0;
        for (std::uint64_t qq = q; qq <= n;) {
            ++c;
            if (qq > n / q) break;
            qq *= q;
        }

        // S1 coefficient: (n/(q(q-1))) * sum_{j=0..c} q^-j, exact
        mpq_class geom = 0;
        mpq_class qpow = 1;
        for (int j = 0; j <= c; ++j) {
            geom += 1 / qpow;
            qpow *= qs;
        }
        mpq_class coef1 = mpq_class(static_cast<long>(n), 1) * geom /
                          (mpq_class(qs) * (qs - 1));
        s1 = s1 + Enclosure::exact(coef1, prec) * lq;

        // S2 coefficient: sum_{j=0..c} ({n/(q^j(q-1))} - {n/q^(j+1)})
        mpq_class coef2 = 0;
        mpq_class denom = qs - 1;
        mpq_class denom_next = qs;
        for (int j = 0; j <= c; ++j) {
            coef2 += frac(mpq_class(static_cast<long>(n), 1) / denom) -
                     frac(mpq_class(static_cast<long>(n), 1) / denom_next);
            denom *= qs;
            denom_next *= qs;
        }
        Enclosure term2 = Enclosure::exact(coef2, prec) * lq;
        s2 = s2 + term2;

        bool small_q = (q - 1) * (q - 1) <= n;  // q <= sqrt(n) + 1
        if (small_q) {
            s3 = s3 + term2;
            return;
        }
        s4 = s4 + term2;

        // big primes: c = 1 and the j = 1 fractional parts equal the values
        mpq_class nq = mpq_class(static_cast<long>(n), 1);
        mpq_class f5 = frac(nq / (qs - 1)) - frac(nq / qs);
        s5 = s5 + Enclosure::exact(f5, prec) * lq;
        mpq_class c6 = nq / (mpq_class(qs) * qs * (qs - 1));
        s6 = s6 + Enclosure::exact(c6, prec) * lq;
        mpq_class c7 = nq / (mpq_class(qs) * (qs - 1));
        s7 = s7 + Enclosure::exact(c7, prec) * lq;
        if (n / (q - 1) - n / q == 1) s8 = s8 + lq;
    });

    d.pieces = {{"f1", f1}, {"f2", f2}, {"S1", s1}, {"S2", s2}, {"S3", s3},
                {"S4", s4}, {"S5", s5}, {"S6", s6}, {"S7", s7}, {"S8", s8}};
    return d;
}

}  // namespace minkphi
