#include <doctest.h>

#include "minkphi/constants.hpp"
#include "minkphi/minkowski.hpp"

using namespace minkphi;

namespace {

// factor n! directly and count powers of q (independent of Legendre)
std::uint64_t factorial_valuation(std::uint64_t n, std::uint64_t q) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    std::uint64_t count = 0;
    while (mpz_divisible_ui_p(f.get_mpz_t(), static_cast<unsigned long>(q))) {
        mpz_divexact_ui(f.get_mpz_t(), f.get_mpz_t(), static_cast<unsigned long>(q));
        ++count;
    }
    return count;
}

Enclosure big_log(const mpz_class& v, mpfr_prec_t prec = 256) {
    return log(Enclosure::exact(v, prec));
}

}  // namespace

TEST_CASE("minkowski exponents") {
    CHECK(minkowski_exponent(2, 2) == 4);
    CHECK(minkowski_exponent(2, 3) == 1);
    CHECK(minkowski_exponent(2, 5) == 0);
    CHECK_THROWS_AS(minkowski_exponent(2, 4), std::domain_error);
}

TEST_CASE("exact G values") {
    CHECK(g_exact(1).second == 2);
    CHECK(g_exact(2).second == 48);
    CHECK(g_exact(3).second == 96);
    CHECK(g_exact(4).second == 23040);
    CHECK(g_exact(6).second == 23224320);
    // factored form multiplies back to the integer
    auto [ge, gz] = g_exact(12);
    mpz_class prod = 1, power;
    for (auto [q, r] : ge.exponents) {
        CHECK(r >= 1);
        CHECK(r == minkowski_exponent(12, q));
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(q),
                      static_cast<unsigned long>(r));
        prod *= power;
    }
    CHECK(prod == gz);
}

TEST_CASE("exact H values and divisibility") {
    CHECK(h_exact(1) == 48);
    CHECK(h_exact(2) == 11520);
    CHECK(h_exact(3) == 5806080);
    for (std::uint64_t n = 1; n <= 48; ++n) {
        mpz_class g2n = g_exact(2 * n).second;
        CHECK(mpz_divisible_2exp_p(g2n.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1)));
        mpz_class back = h_exact(n);
        mpz_mul_2exp(back.get_mpz_t(), back.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
        CHECK(back == g2n);
    }
}

TEST_CASE("legendre valuation against direct factorization") {
    CHECK(legendre_valuation(0, 2) == 0);
    CHECK(legendre_valuation(10, 2) == 8);
    CHECK(legendre_valuation(10, 5) == 2);
    for (std::uint64_t n : {6ULL, 10ULL, 25ULL, 97ULL})
        for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL})
            CHECK(legendre_valuation(n, q) == factorial_valuation(n, q));
    CHECK_THROWS_AS(legendre_valuation(10, 6), std::domain_error);
}

TEST_CASE("Robbins log-factorial enclosure") {
    CHECK(log_factorial_enclosure(1).contains(mpq_class(0)));
    CHECK(log_factorial_enclosure(10).contains(
        Enclosure::from_decimal("15.1044125730755152952257093293", 256)));
    CHECK(log_factorial_enclosure(1000).width() < 1e-4);
    // the true log n! stays inside for a spread of n
    for (std::uint64_t n : {2ULL, 5ULL, 30ULL, 500ULL}) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
        CHECK(log_factorial_enclosure(n).contains(big_log(f)));
    }
}

TEST_CASE("log G dual-path enclosure") {
    Enclosure l2v = log_g(2);
    CHECK(l2v.contains(Enclosure::from_decimal("3.87120101090789092906417372276", 256)));
    CHECK(exp(l2v).contains(mpq_class(48)));
    for (std::uint64_t n : {2ULL, 3ULL, 4ULL, 10ULL, 100ULL, 777ULL, 1000ULL})
        CHECK(log_g(n).contains(big_log(g_exact(n).second)));
    CHECK_THROWS_AS(log_g(1), std::domain_error);
}

TEST_CASE("theorem-1 sandwich at spot points") {
    for (std::uint64_t n : {2ULL, 3ULL, 57ULL, 321ULL, 1000ULL}) {
        Theorem1Bounds b = theorem1_bounds(n);
        Enclosure lg = log_g(n);
        CHECK(compare(b.main + b.lower, lg) == Cmp::LessCertain);
        CHECK(compare(lg, b.main + b.upper) == Cmp::LessCertain);
        // the relaxed lower bound really is lower
        CHECK(compare(b.main + b.lower_relaxed, b.main + b.lower) == Cmp::LessCertain);
    }
}

TEST_CASE("threshold probes from the closed-form bound proof") {
    auto ratio_sqrt = [](std::uint64_t n, const Enclosure& v) {
        Enclosure en = Enclosure::exact(static_cast<long>(n), v.precision());
        return v / (sqrt(en) * log(en));
    };
    // u_G / (sqrt(n) log n) is decreasing and dips below 3/2 at 321
    std::uint64_t grid[] = {2, 8, 33, 100, 321, 1000, 2500, 5000};
    Enclosure prev = ratio_sqrt(grid[0], theorem1_bounds(grid[0]).upper);
    for (std::size_t i = 1; i < std::size(grid); ++i) {
        Enclosure cur = ratio_sqrt(grid[i], theorem1_bounds(grid[i]).upper);
        CHECK(compare(cur, prev) == Cmp::LessCertain);
        prev = cur;
    }
    CHECK(compare(ratio_sqrt(321, theorem1_bounds(321).upper),
                  rational(3, 2)) == Cmp::LessCertain);
    // L_G / (sqrt(n) log n) is increasing
    Enclosure prev_l = ratio_sqrt(grid[0], theorem1_bounds(grid[0]).lower_relaxed);
    for (std::size_t i = 1; i < std::size(grid); ++i) {
        Enclosure cur = ratio_sqrt(grid[i], theorem1_bounds(grid[i]).lower_relaxed);
        CHECK(compare(prev_l, cur) == Cmp::LessCertain);
        prev_l = cur;
    }
    CHECK(compare(ratio_sqrt(321, theorem1_bounds(321).lower_relaxed),
                  -rational(3, 2)) == Cmp::GreaterCertain);
    // u_G / n decreasing from 8 on, below 0.668 at 168
    std::uint64_t grid2[] = {8, 16, 100, 168, 1000, 5000};
    Enclosure prev_n = theorem1_bounds(grid2[0]).upper / 8;
    for (std::size_t i = 1; i < std::size(grid2); ++i) {
        Enclosure cur = theorem1_bounds(grid2[i]).upper / static_cast<long>(grid2[i]);
        CHECK(compare(cur, prev_n) == Cmp::LessCertain);
        prev_n = cur;
    }
    CHECK(compare(theorem1_bounds(168).upper / 168, rational(668, 1000)) ==
          Cmp::LessCertain);
}

TEST_CASE("corollary H bounds transport from the G bounds at 2n") {
    for (std::uint64_t n : {2ULL, 10ULL, 100ULL}) {
        CorollaryHBounds hb = corollary_h_bounds(n);
        Theorem1Bounds gb = theorem1_bounds(2 * n);
        Enclosure l2v = log2_enclosure();
        CHECK(hb.lower.intersects(gb.lower + l2v));
        CHECK(hb.upper.intersects(gb.upper + l2v));
        CHECK((hb.main + Enclosure::exact(static_cast<long>(n)) * l2v).intersects(gb.main));
        // sandwich of log H via the definition
        Enclosure log_h = log_g(2 * n) -
                          Enclosure::exact(static_cast<long>(n - 1)) * l2v;
        CHECK(compare(hb.main + hb.lower, log_h) == Cmp::LessCertain);
        CHECK(compare(log_h, hb.main + hb.upper) == Cmp::LessCertain);
    }
    // n = 2 sandwich around log 11520 specifically
    CorollaryHBounds hb2 = corollary_h_bounds(2);
    Enclosure true_val = big_log(mpz_class(11520));
    CHECK(compare(hb2.main + hb2.lower, true_val) == Cmp::LessCertain);
    CHECK(compare(true_val, hb2.main + hb2.upper) == Cmp::LessCertain);
}

TEST_CASE("closed-form bounds and their equality cases") {
    auto reports2 = nice_bounds_check(2);
    REQUIRE(reports2.size() == 4);
    for (const auto& r : reports2) CHECK(r.status == BoundStatus::Holds);
    CHECK(reports2[2].campaign == "nice_eq5");
    CHECK(reports2[2].note == "equality");  // G(2) = 48 = (4 sqrt 3)^2

    auto reports1 = nice_bounds_check(1);
    REQUIRE(reports1.size() == 2);
    CHECK(reports1[0].campaign == "nice_eq5");
    CHECK(reports1[0].status == BoundStatus::Holds);
    CHECK(reports1[1].campaign == "nice_eq6");
    CHECK(reports1[1].note == "equality");  // H(1) = 48 = 2*24

    for (const auto& r : nice_bounds_check(500)) {
        CHECK(r.status == BoundStatus::Holds);
        CHECK(r.note.empty());
    }
}

TEST_CASE("comparison against the coarser published bound") {
    for (std::uint64_t n : {1ULL, 2ULL, 1500ULL})
        CHECK(silverberg_comparison(n).status == BoundStatus::Holds);
    // the gap between the two upper bounds per n is log(6.31/(2 sqrt 3))
    Enclosure gap = log(rational(631, 100) / (2 * sqrt(Enclosure::exact(3L))));
    CHECK(compare(rational(59, 100), gap) == Cmp::LessCertain);
    CHECK(compare(gap, rational(61, 100)) == Cmp::LessCertain);
}

TEST_CASE("proof-level decomposition of log G") {
    for (std::uint64_t n : {1000ULL, 1500ULL}) {
        LogDecomposition d = decompose_log_g(n, 128);
        REQUIRE(d.pieces.size() == 10);
        auto piece = [&](const char* name) {
            for (const auto& [k, v] : d.pieces)
                if (k == name) return v;
            FAIL("missing piece");
            return Enclosure();
        };
        Enclosure en = Enclosure::exact(static_cast<long>(n), 128);
        Enclosure ln = log(en), sn = sqrt(en);
        Enclosure lg = log_g(n, 128);

        // main + residual encloses log G
        CHECK((d.main_term + d.residual).contains(lg));
        // the regrouped identity reassembles log G
        Enclosure assembled = en * ln +
                              en * (rational(3, 2, 128) * log2_enclosure(128) - 1) +
                              piece("f1") + piece("f2") + piece("S1") - piece("S2");
        CHECK(assembled.intersects(lg));
        // split identities
        CHECK(piece("S2").intersects(piece("S3") + piece("S4")));
        CHECK(piece("S4").intersects(piece("S5") + piece("S6")));
        CHECK(piece("S5").intersects(piece("S7") - piece("S8")));

        // the displayed bounds on each piece (valid for n >= 1000)
        Enclosure s3_bound = 3 * sn + 7 * sn / ln + 1 - log2_enclosure(128) + 1 / ln;
        CHECK(compare(abs(piece("S3")), s3_bound) == Cmp::LessCertain);
        Enclosure s6_bound = rational(1, 4, 128) * (1 + 1 / sn) * (1 + ln);
        CHECK(compare(piece("S6"), s6_bound) == Cmp::LessCertain);
        CHECK(piece("S6").lo_double() >= 0.0);
        Enclosure s7_bound = rational(1, 2, 128) * (1 + sn) * (2 + ln);
        CHECK(compare(piece("S7"), s7_bound) == Cmp::LessCertain);
        CHECK(piece("S7").lo_double() >= 0.0);
        Enclosure s8_bound = rational(1, 2, 128) * sn * ln + sn + 1;
        CHECK(compare(piece("S8"), s8_bound) == Cmp::LessCertain);
        CHECK(piece("S8").lo_double() >= 0.0);
        // S1 sits between K(n-1) - log n - 1 and nK
        Enclosure k = k_constant(128);
        CHECK(compare(k * (en - 1) - ln - 1, piece("S1")) == Cmp::LessCertain);
        CHECK(compare(piece("S1"), k * en) == Cmp::LessCertain);
        // f1 within [-(1/2)log 2, log(n+1)]
        CHECK(compare(-(log2_enclosure(128) / 2) - rational(1, 1000, 128),
                      piece("f1")) == Cmp::LessCertain);
        CHECK(compare(piece("f1"), log(en + 1) + rational(1, 1000, 128)) ==
              Cmp::LessCertain);
    }
}
