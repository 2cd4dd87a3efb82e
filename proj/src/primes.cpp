#include "minkphi/primes.hpp"

#include <stdexcept>

namespace minkphi {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::domain_error("primes_up_to: limit must be >= 2");
    bits_.assign(limit + 1, true);
    bits_[0] = bits_[1] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!bits_[p]) continue;
        for (std::uint64_t m = p * p; m <= limit; m += p) bits_[m] = false;
    }
}

std::uint64_t PrimeSieve::count_up_to(std::uint64_t x) const {
    if (x > limit_) throw std::domain_error("PrimeSieve: count beyond sieve limit");
    std::uint64_t c = 0;
    for (std::uint64_t m = 2; m <= x; ++m) c += bits_[m];
    return c;
}

std::vector<std::uint64_t> PrimeSieve::primes() const {
    std::vector<std::uint64_t> out;
    for_each_prime([&](std::uint64_t p) { out.push_back(p); });
    return out;
}

PrimeSieve primes_up_to(std::uint64_t limit) { return PrimeSieve(limit); }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t nth_prime(std::uint64_t i) {
    if (i == 0) throw std::domain_error("nth_prime: index starts at 1");
    std::uint64_t limit = 64;
    for (;;) {
        PrimeSieve s(limit);
        std::uint64_t seen = 0;
        for (std::uint64_t p = 2; p <= s.limit(); ++p) {
            if (!s.is_prime(p)) continue;
            if (++seen == i) return p;
        }
        limit *= 2;
    }
}

std::uint64_t prime_count(std::uint64_t x) {
    if (x < 2) return 0;
    return PrimeSieve(x).count_up_to(x);
}

Enclosure chebyshev_theta(std::uint64_t x, mpfr_prec_t prec) {
    if (x < 1) throw std::domain_error("chebyshev_theta: x must be >= 1");
    Enclosure sum = Enclosure::exact(0L, prec);
    if (x < 2) return sum;
    PrimeSieve s(x);
    s.for_each_prime([&](std::uint64_t p) {
        sum = sum + log(Enclosure::exact(mpz_class(static_cast<unsigned long>(p)), prec));
    });
    return sum;
}

mpz_class primorial(std::uint64_t k) {
    if (k < 2) throw std::domain_error("primorial: k must be >= 2");
    mpz_class out = 1;
    PrimeSieve s(k);
    s.for_each_prime([&](std::uint64_t p) { out *= static_cast<unsigned long>(p); });
    return out;
}

mpq_class prime_product_ratio(std::uint64_t t) {
    if (t < 1) throw std::domain_error("prime_product_ratio: t must be >= 1");
    mpq_class out = 1;
    std::uint64_t limit = nth_prime(t);
    PrimeSieve s(limit);
    std::uint64_t seen = 0;
    s.for_each_prime([&](std::uint64_t p) {
        if (seen++ >= t) return;
        out *= mpq_class(static_cast<unsigned long>(p), static_cast<unsigned long>(p - 1));
    });
    out.canonicalize();
    return out;
}

BoundReport mertens_lower(std::uint64_t q) {
    if (!is_prime_u64(q)) throw std::domain_error("mertens_lower: q must be prime");
    mpq_class product = 1;
    PrimeSieve s(q);
    s.for_each_prime([&](std::uint64_t p) {
        product *= mpq_class(static_cast<unsigned long>(p), static_cast<unsigned long>(p - 1));
    });
    product.canonicalize();
    // claim: rhs < product
    BoundReport rep = certify_less("mertens_lower", static_cast<long long>(q), [&](mpfr_prec_t prec) {
        Enclosure lq = log(Enclosure::exact(static_cast<long>(q), prec));
        Enclosure rhs = exp(euler_gamma(prec)) * lq *
                        (1 - 1 / (2 * pow_int(lq, 2)));
        return std::pair{rhs, Enclosure::exact(mpq_class(product), prec)};
    });
    return rep;
}

BoundReport theta_upper_check(std::uint64_t x) {
    if (x < 2) throw std::domain_error("theta_upper_check: x must be >= 2");
    return certify_less("theta_upper", static_cast<long long>(x), [&](mpfr_prec_t prec) {
        Enclosure ex = Enclosure::exact(static_cast<long>(x), prec);
        Enclosure rhs = ex * (1 + 1 / (2 * log(ex)));
        return std::pair{chebyshev_theta(x, prec), rhs};
    });
}

BoundReport pi_upper_check(std::uint64_t x) {
    if (x < 2) throw std::domain_error("pi_upper_check: x must be >= 2");
    long long pi_x = static_cast<long long>(prime_count(x));
    return certify_less("pi_upper", static_cast<long long>(x), [&](mpfr_prec_t prec) {
        Enclosure ex = Enclosure::exact(static_cast<long>(x), prec);
        Enclosure lx = log(ex);
        Enclosure rhs = (ex / lx) * (1 + rational(3, 2, prec) / lx);
        return std::pair{Enclosure::exact(pi_x, prec), rhs};
    });
}

}  // namespace minkphi
