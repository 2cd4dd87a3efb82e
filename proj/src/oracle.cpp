#include "minkphi/oracle.hpp"

#include <functional>
#include <stdexcept>

#include "minkphi/minkowski.hpp"

namespace minkphi {

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned k = 0;
        while (n % p == 0) { n /= p; ++k; }
        out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

mpz_class pow_ui(std::uint64_t base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

}  // namespace

mpz_class gl_order(std::uint64_t n, std::uint64_t modulus) {
    if (n < 1) throw std::domain_error("gl_order: n must be >= 1");
    if (modulus < 2) throw std::domain_error("gl_order: modulus must be >= 2");
    mpz_class order = 1;
    for (auto [p, k] : factorize(modulus)) {
        // |GL_n(Z/p^k)| = p^((k-1) n^2) prod_{i=0..n-1} (p^n - p^i)
        mpz_class pn = pow_ui(p, static_cast<unsigned long>(n));
        mpz_class local = pow_ui(p, (k - 1) * static_cast<unsigned long>(n * n));
        for (std::uint64_t i = 0; i < n; ++i)
            local *= pn - pow_ui(p, static_cast<unsigned long>(i));
        order *= local;
    }
    return order;
}

mpz_class gsp_order(std::uint64_t genus, std::uint64_t modulus) {
    if (genus < 1) throw std::domain_error("gsp_order: genus must be >= 1");
    if (modulus < 2) throw std::domain_error("gsp_order: modulus must be >= 2");
    mpz_class order = 1;
    for (auto [p, k] : factorize(modulus)) {
        // |GSp_2g(Z/p^k)| = p^((k-1)(2g^2+g+1)) (p-1) p^(g^2) prod_{i=1..g} (p^2i - 1)
        unsigned long dim = static_cast<unsigned long>(2 * genus * genus + genus + 1);
        mpz_class local = pow_ui(p, (k - 1) * dim);
        local *= mpz_class(static_cast<unsigned long>(p)) - 1;
        local *= pow_ui(p, static_cast<unsigned long>(genus * genus));
        for (std::uint64_t i = 1; i <= genus; ++i)
            local *= pow_ui(p, static_cast<unsigned long>(2 * i)) - 1;
        order *= local;
    }
    return order;
}

namespace {

GcdScan scan(std::uint64_t n_max, bool early_stop, const mpz_class& target,
             const std::function<mpz_class(std::uint64_t)>& order_of) {
    if (n_max < 3) throw std::domain_error("gcd scan: n_max must be >= 3");
    GcdScan out;
    out.value = order_of(3);
    out.stabilized_at = 3;
    out.scanned_to = 3;
    unsigned stable = 0;
    for (std::uint64_t N = 4; N <= n_max; ++N) {
        mpz_class next = gcd(out.value, order_of(N));
        if (next != out.value) {
            out.value = std::move(next);
            out.stabilized_at = N;
            stable = 0;
        } else {
            ++stable;
        }
        out.scanned_to = N;
        if (early_stop && stable >= 50 && out.value == target) {
            out.early_stopped = true;
            return out;
        }
    }
    out.scanned_to = n_max;
    return out;
}

}  // namespace

GcdScan g_by_gcd(std::uint64_t n, std::uint64_t n_max, bool early_stop) {
    mpz_class target = early_stop ? g_exact(n).second : mpz_class(0);
    return scan(n_max, early_stop, target,
                [n](std::uint64_t N) { return gl_order(n, N); });
}

GcdScan gsp_by_gcd(std::uint64_t genus, std::uint64_t n_max, bool early_stop) {
    mpz_class target = early_stop ? h_exact(genus) : mpz_class(0);
    return scan(n_max, early_stop, target,
                [genus](std::uint64_t N) { return gsp_order(genus, N); });
}

std::vector<std::pair<std::uint64_t, mpz_class>> g_by_gcd_trace(std::uint64_t n,
                                                                std::uint64_t n_max) {
    if (n_max < 3) throw std::domain_error("g_by_gcd_trace: n_max must be >= 3");
    std::vector<std::pair<std::uint64_t, mpz_class>> out;
    mpz_class g = gl_order(n, 3);
    out.emplace_back(3, g);
    for (std::uint64_t N = 4; N <= n_max; ++N) {
        g = gcd(g, gl_order(n, N));
        out.emplace_back(N, g);
    }
    return out;
}

}  // namespace minkphi
