#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace minkphi {

/// |GL_n(Z/NZ)|, multiplicative over the prime-power factorization of N,
/// with |GL_n(Z/p^k Z)| = p^((k-1)n^2) * prod_{i=0..n-1} (p^n - p^i).
mpz_class gl_order(std::uint64_t n, std::uint64_t modulus);

/// Order of the genus-n general symplectic (similitude) group over Z/NZ
/// under the 2n x 2n convention:
/// |GSp_2n(Z/p^k Z)| = p^((k-1)(2n^2+n+1)) * (p-1) * p^(n^2) * prod_{i=1..n} (p^2i - 1).
mpz_class gsp_order(std::uint64_t genus, std::uint64_t modulus);

struct GcdScan {
    mpz_class value;
    std::uint64_t scanned_to = 0;                 // last modulus folded in
    std::optional<std::uint64_t> stabilized_at;   // first N where gcd reached its final value
    bool early_stopped = false;
};

/// gcd over 3 <= N <= n_max of |GL_n(Z/NZ)|. With early_stop the scan ends
/// once the gcd has equalled g_exact(n) for 50 consecutive moduli (the gcd
/// can only shrink and every order is divisible by G(n), so the value is
/// already final); pass early_stop = false to force the full scan.
GcdScan g_by_gcd(std::uint64_t n, std::uint64_t n_max, bool early_stop = true);

/// Same scan for gsp_order against h_exact(genus). Best effort: the GSp
/// convention is validated empirically, so disagreement is reported via
/// the returned value, never asserted.
GcdScan gsp_by_gcd(std::uint64_t genus, std::uint64_t n_max, bool early_stop = true);

/// Trace of the running gcd after each modulus, for monotonicity and
/// divisibility checks. Entries are (N, gcd after folding N).
std::vector<std::pair<std::uint64_t, mpz_class>> g_by_gcd_trace(std::uint64_t n,
                                                                std::uint64_t n_max);

}  // namespace minkphi
