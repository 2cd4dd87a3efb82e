#include "minkphi/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace minkphi {

namespace {

void check_prec(mpfr_prec_t prec) {
    if (prec < MPFR_PREC_MIN || prec > 4096)
        throw std::domain_error("enclosure: precision out of range");
}

}  // namespace

Enclosure Enclosure::exact(long v, mpfr_prec_t prec) {
    check_prec(prec);
    Enclosure e(prec);
    mpfr_set_si(e.lo_, v, MPFR_RNDD);
    mpfr_set_si(e.hi_, v, MPFR_RNDU);
    return e;
}

Enclosure Enclosure::exact(const mpz_class& v, mpfr_prec_t prec) {
    check_prec(prec);
    Enclosure e(prec);
    mpfr_set_z(e.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(e.hi_, v.get_mpz_t(), MPFR_RNDU);
    return e;
}

Enclosure Enclosure::exact(const mpq_class& v, mpfr_prec_t prec) {
    check_prec(prec);
    Enclosure e(prec);
    mpfr_set_q(e.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(e.hi_, v.get_mpq_t(), MPFR_RNDU);
    return e;
}

Enclosure Enclosure::from_decimal(const char* s, mpfr_prec_t prec) {
    check_prec(prec);
    Enclosure e(prec);
    if (mpfr_set_str(e.lo_, s, 10, MPFR_RNDD) != 0 && mpfr_nan_p(e.lo_))
        throw std::domain_error("enclosure: bad decimal literal");
    mpfr_set_str(e.hi_, s, 10, MPFR_RNDU);
    return e;
}

Enclosure Enclosure::rounded_to(mpfr_prec_t prec) const {
    check_prec(prec);
    Enclosure e(prec);
    mpfr_set(e.lo_, lo_, MPFR_RNDD);
    mpfr_set(e.hi_, hi_, MPFR_RNDU);
    return e;
}

std::optional<Enclosure> Enclosure::intersection(const Enclosure& a, const Enclosure& b) {
    if (!a.intersects(b)) return std::nullopt;
    Enclosure e(std::max(a.precision(), b.precision()));
    mpfr_set(e.lo_, mpfr_cmp(a.lo_, b.lo_) >= 0 ? a.lo_ : b.lo_, MPFR_RNDD);
    mpfr_set(e.hi_, mpfr_cmp(a.hi_, b.hi_) <= 0 ? a.hi_ : b.hi_, MPFR_RNDU);
    return e;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
    Enclosure e(std::max(a.precision(), b.precision()));
    mpfr_set(e.lo_, mpfr_cmp(a.lo_, b.lo_) <= 0 ? a.lo_ : b.lo_, MPFR_RNDD);
    mpfr_set(e.hi_, mpfr_cmp(a.hi_, b.hi_) >= 0 ? a.hi_ : b.hi_, MPFR_RNDU);
    return e;
}

double Enclosure::width() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

namespace {

std::string format_one(const mpfr_t x, int digits, mpfr_rnd_t rnd) {
    if (digits < 1) digits = 1;
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*R*g", digits, rnd, x);
    return std::string(buf.data());
}

}  // namespace

std::string Enclosure::lo_string(int digits) const { return format_one(lo_, digits, MPFR_RNDD); }
std::string Enclosure::hi_string(int digits) const { return format_one(hi_, digits, MPFR_RNDU); }

std::string Enclosure::to_string(int digits) const {
    return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    Enclosure e(std::max(a.precision(), b.precision()));
    mpfr_add(e.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(e.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return e;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    Enclosure e(std::max(a.precision(), b.precision()));
    mpfr_sub(e.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(e.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return e;
}

Enclosure Enclosure::operator-() const {
    Enclosure e(precision());
    mpfr_neg(e.lo_, hi_, MPFR_RNDD);
    mpfr_neg(e.hi_, lo_, MPFR_RNDU);
    return e;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Enclosure e(std::max(a.precision(), b.precision()));
    mpfr_t t;
    mpfr_init2(t, e.precision());

    // lo = min of the four products rounded down
    mpfr_mul(e.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, e.lo_) < 0) mpfr_set(e.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, e.lo_) < 0) mpfr_set(e.lo_, t, MPFR_RNDD);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, e.lo_) < 0) mpfr_set(e.lo_, t, MPFR_RNDD);

    // hi = max of the four rounded up
    mpfr_mul(e.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, e.hi_) > 0) mpfr_set(e.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, e.hi_) > 0) mpfr_set(e.hi_, t, MPFR_RNDU);
    mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, e.hi_) > 0) mpfr_set(e.hi_, t, MPFR_RNDU);

    mpfr_clear(t);
    return e;
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains_zero())
        throw std::domain_error("enclosure: division by interval containing 0");
    Enclosure e(std::max(a.precision(), b.precision()));
    mpfr_t t;
    mpfr_init2(t, e.precision());

    mpfr_div(e.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, e.lo_) < 0) mpfr_set(e.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, e.lo_) < 0) mpfr_set(e.lo_, t, MPFR_RNDD);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, e.lo_) < 0) mpfr_set(e.lo_, t, MPFR_RNDD);

    mpfr_div(e.hi_, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, e.hi_) > 0) mpfr_set(e.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, e.hi_) > 0) mpfr_set(e.hi_, t, MPFR_RNDU);
    mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, e.hi_) > 0) mpfr_set(e.hi_, t, MPFR_RNDU);

    mpfr_clear(t);
    return e;
}

Enclosure log(const Enclosure& a) {
    if (mpfr_sgn(a.lo_) <= 0)
        throw std::domain_error("enclosure: log of interval not strictly positive");
    Enclosure e(a.precision());
    mpfr_log(e.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(e.hi_, a.hi_, MPFR_RNDU);
    return e;
}

Enclosure exp(const Enclosure& a) {
    Enclosure e(a.precision());
    mpfr_exp(e.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(e.hi_, a.hi_, MPFR_RNDU);
    return e;
}

Enclosure sqrt(const Enclosure& a) {
    if (mpfr_sgn(a.lo_) < 0)
        throw std::domain_error("enclosure: sqrt of interval with negative part");
    Enclosure e(a.precision());
    mpfr_sqrt(e.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqrt(e.hi_, a.hi_, MPFR_RNDU);
    return e;
}

Enclosure abs(const Enclosure& a) {
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    Enclosure e(a.precision());
    mpfr_set_zero(e.lo_, 1);
    mpfr_neg(e.hi_, a.lo_, MPFR_RNDU);
    if (mpfr_cmp(a.hi_, e.hi_) > 0) mpfr_set(e.hi_, a.hi_, MPFR_RNDU);
    return e;
}

Enclosure pow_int(const Enclosure& a, long k) {
    if (k == 0) return Enclosure::exact(1L, a.precision());
    if (k < 0) {
        Enclosure p = pow_int(a, -k);
        return Enclosure::exact(1L, a.precision()) / p;
    }
    Enclosure e(a.precision());
    if (k % 2 == 1 || mpfr_sgn(a.lo_) >= 0) {
        // odd power, or a nonnegative base: monotone increasing
        mpfr_pow_si(e.lo_, a.lo_, k, MPFR_RNDD);
        mpfr_pow_si(e.hi_, a.hi_, k, MPFR_RNDU);
        return e;
    }
    if (mpfr_sgn(a.hi_) <= 0) {
        // even power of a nonpositive interval: monotone decreasing
        mpfr_pow_si(e.lo_, a.hi_, k, MPFR_RNDD);
        mpfr_pow_si(e.hi_, a.lo_, k, MPFR_RNDU);
        return e;
    }
    // even power straddling zero
    mpfr_set_zero(e.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, a.precision());
    mpfr_pow_si(e.hi_, a.lo_, k, MPFR_RNDU);
    mpfr_pow_si(t, a.hi_, k, MPFR_RNDU);
    if (mpfr_cmp(t, e.hi_) > 0) mpfr_set(e.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return e;
}

Cmp compare(const Enclosure& a, const Enclosure& b) {
    if (mpfr_cmp(a.hi_, b.lo_) < 0) return Cmp::LessCertain;
    if (mpfr_cmp(a.lo_, b.hi_) > 0) return Cmp::GreaterCertain;
    return Cmp::Inconclusive;
}

Enclosure rational(long num, long den, mpfr_prec_t prec) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return Enclosure::exact(mpq_class(num, den), prec);
}

Enclosure log2_enclosure(mpfr_prec_t prec) {
    check_prec(prec);
    Enclosure e(prec);
    mpfr_const_log2(e.lo_, MPFR_RNDD);
    mpfr_const_log2(e.hi_, MPFR_RNDU);
    return e;
}

Enclosure pi_enclosure(mpfr_prec_t prec) {
    check_prec(prec);
    Enclosure e(prec);
    mpfr_const_pi(e.lo_, MPFR_RNDD);
    mpfr_const_pi(e.hi_, MPFR_RNDU);
    return e;
}

Enclosure log_sqrt_2pi(mpfr_prec_t prec) {
    return log(sqrt(pi_enclosure(prec) * 2));
}

Enclosure euler_gamma(mpfr_prec_t prec) {
    check_prec(prec);
    // 60 significant digits; the true value exceeds the literal by < 1e-60.
    static const char* kGammaDigits =
        "0.577215664901532860606512090082402431042159335939923598805767";
    mpfr_prec_t wide = std::max<mpfr_prec_t>(prec, 220);
    Enclosure lit = Enclosure::from_decimal(kGammaDigits, wide);
    Enclosure pad = Enclosure::from_decimal("1e-59", wide);
    Enclosure e(wide);
    mpfr_sub(e.lo_, lit.lo_, pad.hi_, MPFR_RNDD);
    mpfr_add(e.hi_, lit.hi_, pad.hi_, MPFR_RNDU);
    return e.rounded_to(prec);
}

}  // namespace minkphi
