#include <doctest.h>

#include <numeric>
#include <random>

#include "minkphi/primes.hpp"
#include "minkphi/totient.hpp"

using namespace minkphi;

namespace {

// count residues coprime to m: the definitional phi oracle
std::uint64_t phi_by_counting(std::uint64_t m) {
    std::uint64_t c = 0;
    for (std::uint64_t a = 1; a <= m; ++a)
        if (std::gcd(a, m) == 1) ++c;
    return c;
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>> kTable1 = {
    {1, 6},  {2, 12},  {3, 18},  {4, 30},  {5, 22},   {6, 42},  {8, 60},
    {9, 54}, {10, 66}, {12, 90}, {16, 120}, {18, 126}, {20, 150}, {24, 210}};

}  // namespace

TEST_CASE("p-adic valuation") {
    CHECK(p_adic_valuation(1, 2) == 0);
    CHECK(p_adic_valuation(48, 2) == 4);
    CHECK(p_adic_valuation(102131, 2) == 0);
    CHECK_THROWS_AS(p_adic_valuation(10, 4), std::domain_error);
}

TEST_CASE("euler phi point queries") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(30) == 8);
    CHECK(euler_phi(30) == phi_by_counting(30));
    CHECK(euler_phi(420) == 96);
    for (std::uint64_t m = 1; m <= 300; ++m) CHECK(euler_phi(m) == phi_by_counting(m));
}

TEST_CASE("totient table invariants") {
    TotientTable t(2000);
    CHECK(t.phi(1) == 1);
    for (std::uint64_t p : {2ULL, 3ULL, 97ULL, 1999ULL})
        CHECK(t.phi(static_cast<std::uint32_t>(p)) == p - 1);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::uint32_t> pick(1, 40);
    for (int i = 0; i < 200; ++i) {
        std::uint32_t a = pick(rng), b = pick(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(t.phi(a * b) == t.phi(a) * t.phi(b));
    }
    // 14 is a nontotient
    CHECK_FALSE(t.max_preimage(14).has_value());
    REQUIRE(t.max_preimage(1).has_value());
    CHECK(*t.max_preimage(1) == 2);
}

TEST_CASE("phi search bound") {
    for (std::uint64_t n : {1ULL, 3ULL, 9ULL, 15ULL})
        CHECK(phi_search_bound(n) == mpq_class(static_cast<unsigned long>(6 * n)));
    CHECK(phi_search_bound(4) == mpq_class(35));
    CHECK(phi_search_bound(16) == mpq_class(1001, 6));
}

TEST_CASE("phi_of reproduces the published table") {
    for (auto [n, expected] : kTable1) CHECK(phi_of(n) == expected);
    CHECK(phi_of(48) == 420);
    CHECK(phi_of(5) == 22);
}

TEST_CASE("phi_of on the 3^k equality family") {
    std::uint64_t p3 = 1;
    for (int k = 1; k <= 7; ++k) {
        p3 *= 3;
        CHECK(phi_of(p3) == 6 * p3);
    }
}

TEST_CASE("phi_of maximality witnessed by trial-division phi") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        std::uint64_t value = phi_of(n);
        CHECK((2 * n) % euler_phi(value) == 0);
        mpq_class bound = phi_search_bound(n);
        mpz_class ceiling_z;
        mpz_fdiv_q(ceiling_z.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
        for (std::uint64_t m = value + 1; m <= ceiling_z.get_ui(); ++m)
            CHECK((2 * n) % euler_phi(m) != 0);
    }
}

TEST_CASE("bulk phi agrees with the downward scan") {
    auto bulk = phi_bulk(3000);
    TotientTable shared(static_cast<std::uint32_t>(phi_bulk_ceiling(3000)));
    for (std::uint64_t n = 1; n <= 3000; ++n)
        CHECK(bulk[n] == phi_of(n, shared));
    for (auto [n, expected] : kTable1) CHECK(bulk[n] == expected);
}

TEST_CASE("piecewise even-n upper bound") {
    CHECK(phi_upper_theorem2(12).contains(mpq_class(231, 2)));  // 9.625 * 12
    CHECK(compare(Enclosure::exact(static_cast<long>(phi_of(12))),
                  phi_upper_theorem2(12)) == Cmp::LessCertain);
    Enclosure b16 = phi_upper_theorem2(16);
    CHECK(b16.contains(Enclosure::from_decimal("178.2643578", 128)));
    CHECK(compare(Enclosure::exact(120L), b16) == Cmp::LessCertain);
    for (std::uint64_t k : {1ULL, 3ULL, 5ULL}) {
        std::uint64_t n = 2048 * k;
        CHECK(compare(Enclosure::exact(static_cast<long>(phi_of(n))),
                      phi_upper_theorem2(n)) == Cmp::LessCertain);
    }
    CHECK_THROWS_AS(phi_upper_theorem2(15), std::domain_error);
}

TEST_CASE("derivative numerator positivity") {
    for (long t : {6L, 100L, 1000000L}) {
        Enclosure c = c_function(Enclosure::exact(t, 128));
        CHECK(c.lo_double() > 0.0);
    }
    CHECK_THROWS_AS(c_function(Enclosure::exact(5L)), std::domain_error);
}

TEST_CASE("log log bound checks") {
    CHECK(loglog_bound_check(24).status == BoundStatus::Fails);
    CHECK(loglog_bound_check(25).status == BoundStatus::Holds);
    CHECK(loglog_bound_check(48).status == BoundStatus::Holds);
    CHECK_THROWS_AS(loglog_bound_check(2), std::domain_error);
    // the ratio at 48 sits between 6.46 and 6.49
    Enclosure n48 = Enclosure::exact(48L, 128);
    Enclosure ratio = Enclosure::exact(static_cast<long>(phi_of(48)), 128) /
                      (n48 * log(log(n48)));
    CHECK(compare(rational(646, 100, 128), ratio) == Cmp::LessCertain);
    CHECK(compare(ratio, rational(649, 100, 128)) == Cmp::LessCertain);
}

TEST_CASE("linear bound crossover at 102132") {
    // 15.87n < 6.49 n log log n first holds at n = 102132
    auto rhs = [](long n) {
        Enclosure en = Enclosure::exact(n, 128);
        return rational(649, 100, 128) * log(log(en));
    };
    CHECK(compare(rhs(102131), rational(1587, 100, 128)) == Cmp::LessCertain);
    CHECK(compare(rational(1587, 100, 128), rhs(102132)) == Cmp::LessCertain);
}

TEST_CASE("primorial family growth") {
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        BoundReport rep = primorial_family_check(q);
        CHECK(rep.status == BoundStatus::Holds);
    }
    CHECK(primorial_family_check(5).note == "equality");  // 30/4 = 2 * 15/4
    CHECK(primorial_family_check(7).note == "equality");
    CHECK(primorial_family_check(2).note.empty());        // 6/1 > 4 strictly
    CHECK_THROWS_AS(primorial_family_check(6), std::domain_error);
}

TEST_CASE("monotone growth probe for the loglog argument") {
    // (log t')(log log t') - log(t'-2) - log log 2 > 0 for t' >= 22
    for (long tp : {22L, 50L, 1000L, 1000000L}) {
        Enclosure t = Enclosure::exact(tp, 128);
        Enclosure probe = log(t) * log(log(t)) - log(t - 2) - log(log2_enclosure(128));
        CHECK(compare(Enclosure::exact(0L, 128), probe) == Cmp::LessCertain);
    }
}

TEST_CASE("constants used in the 6.49 derivation") {
    mpfr_prec_t p = 128;
    Enclosure t22 = Enclosure::exact(22L, p);
    Enclosure l22 = log(t22), ll22 = log(l22);
    Enclosure t20 = Enclosure::exact(20L, p);
    Enclosure denom = log(t20) + log(log2_enclosure(p));
    CHECK(compare(1 + 1 / pow_int(l22 + ll22, 2), rational(105617, 100000, p)) ==
          Cmp::LessCertain);
    CHECK(compare(l22 / denom, rational(117566, 100000, p)) == Cmp::LessCertain);
    CHECK(compare(log(1 + exp(Enclosure::exact(-1L, p))),
                  rational(31327, 100000, p)) == Cmp::LessCertain);
    CHECK(compare(rational(31327, 100000, p) / denom,
                  rational(11915, 100000, p)) == Cmp::LessCertain);
    CHECK(compare(ll22 / denom, rational(42922, 100000, p)) == Cmp::LessCertain);
    Enclosure total = 2 * exp(euler_gamma(p)) * rational(105617, 100000, p) *
                      (rational(117566, 100000, p) + rational(11915, 100000, p) +
                       rational(42922, 100000, p));
    CHECK(compare(total, rational(649, 100, p)) == Cmp::LessCertain);
}
