#include "minkphi/totient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minkphi/primes.hpp"

namespace minkphi {

namespace {

// Per-call scratch tables may not exceed this many entries.
constexpr std::uint64_t kMaxSieve = std::uint64_t(1) << 28;

std::vector<std::uint32_t> sieve_totients(std::uint32_t limit) {
    std::vector<std::uint32_t> phi(static_cast<std::size_t>(limit) + 1);
    std::iota(phi.begin(), phi.end(), 0u);
    for (std::uint32_t p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;  // p composite: already reduced
        for (std::uint64_t m = p; m <= limit; m += p)
            phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
    }
    if (limit >= 1) phi[1] = 1;
    return phi;
}

std::uint64_t floor_of(const mpq_class& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_ulong_p()) throw std::length_error("totient: bound does not fit");
    return f.get_ui();
}

template <typename PhiAt>
std::uint64_t scan_down(std::uint64_t n, std::uint64_t ceiling, PhiAt&& phi_at) {
    std::uint64_t target = 2 * n;
    for (std::uint64_t m = ceiling; m >= 1; --m) {
        if (target % phi_at(m) == 0) return m;
    }
    throw std::logic_error("phi_of: scan found no admissible m");  // unreachable: phi(1)=1
}

}  // namespace

TotientTable::TotientTable(std::uint32_t limit) : limit_(limit) {
    if (limit < 1) throw std::domain_error("TotientTable: limit must be >= 1");
    phi_ = sieve_totients(limit);
    inverse_max_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint32_t m = 1; m <= limit; ++m) inverse_max_[phi_[m]] = m;
}

std::uint32_t p_adic_valuation(std::uint64_t n, std::uint64_t p) {
    if (n < 1) throw std::domain_error("p_adic_valuation: n must be >= 1");
    if (!is_prime_u64(p)) throw std::domain_error("p_adic_valuation: p must be prime");
    std::uint32_t v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m < 1) throw std::domain_error("euler_phi: m must be >= 1");
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

mpq_class phi_search_bound(std::uint64_t n) {
    if (n < 1) throw std::domain_error("phi_search_bound: n must be >= 1");
    std::uint64_t t = p_adic_valuation(n, 2) + 2;
    mpq_class b = prime_product_ratio(t);
    b *= 2 * mpz_class(static_cast<unsigned long>(n));
    b.canonicalize();
    return b;
}

std::uint64_t phi_of(std::uint64_t n) {
    std::uint64_t ceiling = floor_of(phi_search_bound(n));
    if (ceiling > kMaxSieve) throw std::length_error("phi_of: search bound too large");
    auto phi = sieve_totients(static_cast<std::uint32_t>(ceiling));
    return scan_down(n, ceiling, [&](std::uint64_t m) { return phi[m]; });
}

std::uint64_t phi_of(std::uint64_t n, const TotientTable& table) {
    std::uint64_t ceiling = floor_of(phi_search_bound(n));
    if (ceiling > table.limit())
        throw std::length_error("phi_of: table does not cover the search bound");
    return scan_down(n, ceiling, [&](std::uint64_t m) {
        return table.phi(static_cast<std::uint32_t>(m));
    });
}

std::uint64_t phi_bulk_ceiling(std::uint64_t n_max) {
    if (n_max < 1) throw std::domain_error("phi_bulk: n_max must be >= 1");
    mpq_class best = 0;
    for (std::uint32_t v = 0; (std::uint64_t(1) << v) <= n_max; ++v) {
        std::uint64_t largest = (n_max >> v) << v;  // largest multiple of 2^v
        if (largest == 0) break;
        mpq_class b = prime_product_ratio(v + 2);
        b *= 2 * mpz_class(static_cast<unsigned long>(largest));
        if (b > best) best = b;
    }
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
    if (!c.fits_ulong_p()) throw std::length_error("phi_bulk: ceiling does not fit");
    return c.get_ui();
}

std::vector<std::uint64_t> phi_bulk(std::uint64_t n_max) {
    std::uint64_t ceiling = phi_bulk_ceiling(n_max);
    if (ceiling > kMaxSieve) throw std::length_error("phi_bulk: ceiling too large");
    TotientTable table(static_cast<std::uint32_t>(ceiling));

    // smallest-prime-factor sieve for factoring 2n
    std::uint64_t spf_limit = 2 * n_max;
    std::vector<std::uint32_t> spf(spf_limit + 1, 0);
    for (std::uint64_t p = 2; p <= spf_limit; ++p) {
        if (spf[p]) continue;
        for (std::uint64_t m = p; m <= spf_limit; m += p)
            if (!spf[m]) spf[m] = static_cast<std::uint32_t>(p);
    }

    std::vector<std::uint64_t> out(n_max + 1, 0);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        divisors.assign(1, 1);
        std::uint64_t rest = 2 * n;
        while (rest > 1) {
            std::uint64_t p = spf[rest];
            unsigned k = 0;
            while (rest % p == 0) { rest /= p; ++k; }
            std::size_t base = divisors.size();
            std::uint64_t pe = 1;
            for (unsigned e = 1; e <= k; ++e) {
                pe *= p;
                for (std::size_t i = 0; i < base; ++i)
                    divisors.push_back(divisors[i] * pe);
            }
        }
        std::uint64_t best = 0;
        for (std::uint64_t d : divisors) {
            if (d > table.limit()) continue;
            if (auto m = table.max_preimage(static_cast<std::uint32_t>(d)); m && *m > best)
                best = *m;
        }
        out[n] = best;
    }
    return out;
}

Enclosure phi_upper_theorem2(std::uint64_t n, mpfr_prec_t prec) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("phi_upper_theorem2: n must be even");
    if (n % 16 != 0) {
        mpq_class b(77 * mpz_class(static_cast<unsigned long>(n)), 8);
        b.canonicalize();
        return Enclosure::exact(b, prec);
    }
    Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
    Enclosure t_prime = log(en) / log2_enclosure(prec) + 2;
    Enclosure lt = log(t_prime);
    Enclosure s = lt + log(lt);
    return 2 * en * exp(euler_gamma(prec)) * (1 + 1 / pow_int(s, 2)) * (lt + log(s));
}

Enclosure c_function(const Enclosure& t) {
    if (mpfr_cmp_si(t.lo_raw(), 6) < 0)
        throw std::domain_error("c_function: t must be >= 6");
    Enclosure L = log(t);
    Enclosure M = log(L);
    Enclosure L2 = pow_int(L, 2), L3 = pow_int(L, 3), L4 = pow_int(L, 4);
    Enclosure M2 = pow_int(M, 2), M3 = pow_int(M, 3);
    return 1 - L + L3 + L4 + 3 * L * M + 2 * L2 * M + 3 * L3 * M + M2 +
           L * M2 + 3 * L2 * M2 + L * M3 - 2 * (1 + L) * log(L + M);
}

BoundReport loglog_bound_check(std::uint64_t n) {
    if (n < 3) throw std::domain_error("loglog_bound_check: n must be >= 3");
    return loglog_bound_check(n, phi_of(n));
}

BoundReport loglog_bound_check(std::uint64_t n, std::uint64_t phi_n) {
    if (n < 3) throw std::domain_error("loglog_bound_check: n must be >= 3");
    return certify_less("phi_loglog", static_cast<long long>(n), [&](mpfr_prec_t prec) {
        Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
        Enclosure rhs = rational(649, 100, prec) * en * log(log(en));
        return std::pair{Enclosure::exact(static_cast<long>(phi_n), prec), rhs};
    });
}

const std::vector<std::uint64_t>& loglog_exception_set() {
    static const std::vector<std::uint64_t> s{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 18, 20, 24};
    return s;
}

BoundReport primorial_family_check(std::uint64_t q) {
    if (!is_prime_u64(q)) throw std::domain_error("primorial_family_check: q must be prime");
    mpz_class q_sharp = primorial(q);
    mpz_class phi_qsharp = 1;
    PrimeSieve sieve(q);
    sieve.for_each_prime([&](std::uint64_t p) {
        phi_qsharp *= static_cast<unsigned long>(p - 1);
    });
    // phi(2#) = 1 is odd; n = 1 is the least n with phi(q#) | 2n
    mpz_class n_z = phi_qsharp == 1 ? mpz_class(1) : mpz_class(phi_qsharp / 2);
    if (!n_z.fits_ulong_p()) throw std::length_error("primorial_family_check: n infeasible");
    std::uint64_t n = n_z.get_ui();
    std::uint64_t phi_n = phi_of(n);

    BoundReport rep;
    rep.campaign = "primorial_family";
    rep.n = static_cast<long long>(q);
    rep.lhs = Enclosure::exact(q_sharp);
    rep.rhs = Enclosure::exact(mpz_class(static_cast<unsigned long>(phi_n)));
    rep.precision_used = kPrecDefault;

    bool ok_value = mpz_class(static_cast<unsigned long>(phi_n)) >= q_sharp;
    mpq_class ratio_lhs(2 * q_sharp, phi_qsharp);  // 2 prod p/(p-1)
    ratio_lhs.canonicalize();
    mpq_class ratio_rhs(mpz_class(static_cast<unsigned long>(phi_n)),
                        mpz_class(static_cast<unsigned long>(n)));
    ratio_rhs.canonicalize();
    bool ok_ratio = ratio_rhs >= ratio_lhs;
    BoundReport mertens = mertens_lower(q);

    if (!ok_value) {
        rep.status = BoundStatus::Fails;
        rep.note = "value";
    } else if (!ok_ratio) {
        rep.status = BoundStatus::Fails;
        rep.note = "ratio";
    } else if (mertens.status != BoundStatus::Holds) {
        rep.status = mertens.status;
        rep.note = "mertens";
    } else {
        rep.status = BoundStatus::Holds;
        if (ratio_rhs == ratio_lhs) rep.note = "equality";
    }
    return rep;
}

}  // namespace minkphi
