#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace minkphi {

// Working-precision ladder. Comparisons start at 64 bits of mantissa and
// escalate to 128 then 256 before reporting Inconclusive.
inline constexpr mpfr_prec_t kPrecDefault = 64;
inline constexpr mpfr_prec_t kPrecLadder[] = {64, 128, 256};
inline constexpr mpfr_prec_t kPrecMax = 256;

enum class Cmp { LessCertain, GreaterCertain, Inconclusive };

/// A closed interval [lo, hi] with lo rounded toward -inf and hi toward
/// +inf at every operation, so the true real value of any expression built
/// from enclosed inputs is guaranteed to stay inside the result.
///
/// Values are immutable once constructed; all operations are pure and
/// return fresh enclosures at the max precision of their operands.
class Enclosure {
public:
    Enclosure() : Enclosure(kPrecDefault) {}
    explicit Enclosure(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Enclosure(const Enclosure& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Enclosure(Enclosure&& o) noexcept {
        mpfr_init2(lo_, 2);
        mpfr_init2(hi_, 2);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    Enclosure& operator=(Enclosure o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    ~Enclosure() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    // Point enclosures of exact inputs; exact when representable, outward
    // rounded otherwise.
    static Enclosure exact(long v, mpfr_prec_t prec = kPrecDefault);
    static Enclosure exact(const mpz_class& v, mpfr_prec_t prec = kPrecDefault);
    static Enclosure exact(const mpq_class& v, mpfr_prec_t prec = kPrecDefault);
    /// Outward-rounded parse of a decimal literal (one ulp wide at most).
    static Enclosure from_decimal(const char* s, mpfr_prec_t prec = kPrecDefault);

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    /// Re-round outward to a (typically lower) precision. Never shrinks.
    Enclosure rounded_to(mpfr_prec_t prec) const;

    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool contains(const mpq_class& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }
    bool contains(const Enclosure& o) const {
        return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
    }
    bool intersects(const Enclosure& o) const {
        return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
    }
    static std::optional<Enclosure> intersection(const Enclosure& a, const Enclosure& b);
    /// Smallest interval containing both a and b.
    static Enclosure hull(const Enclosure& a, const Enclosure& b);

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double width() const;

    std::string lo_string(int digits = 12) const;  // rounded down
    std::string hi_string(int digits = 12) const;  // rounded up
    /// "[lo, hi]" with outward-rounded decimal endpoints, so the printed
    /// string parses back to an interval containing this one.
    std::string to_string(int digits = 12) const;

    const mpfr_t& lo_raw() const { return lo_; }
    const mpfr_t& hi_raw() const { return hi_; }

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
    Enclosure operator-() const;

    friend Enclosure log(const Enclosure& a);    // requires a.lo > 0
    friend Enclosure exp(const Enclosure& a);
    friend Enclosure sqrt(const Enclosure& a);   // requires a.lo >= 0
    friend Enclosure pow_int(const Enclosure& a, long k);
    friend Enclosure abs(const Enclosure& a);

    /// LessCertain iff a.hi < b.lo; GreaterCertain iff a.lo > b.hi.
    friend Cmp compare(const Enclosure& a, const Enclosure& b);

    friend Enclosure log2_enclosure(mpfr_prec_t prec);
    friend Enclosure pi_enclosure(mpfr_prec_t prec);
    friend Enclosure euler_gamma(mpfr_prec_t prec);

private:
    static Enclosure raw(mpfr_prec_t prec) { return Enclosure(prec); }
    mpfr_t lo_, hi_;
};

inline Enclosure operator+(const Enclosure& a, long b) { return a + Enclosure::exact(b, a.precision()); }
inline Enclosure operator+(long a, const Enclosure& b) { return Enclosure::exact(a, b.precision()) + b; }
inline Enclosure operator-(const Enclosure& a, long b) { return a - Enclosure::exact(b, a.precision()); }
inline Enclosure operator-(long a, const Enclosure& b) { return Enclosure::exact(a, b.precision()) - b; }
inline Enclosure operator*(const Enclosure& a, long b) { return a * Enclosure::exact(b, a.precision()); }
inline Enclosure operator*(long a, const Enclosure& b) { return Enclosure::exact(a, b.precision()) * b; }
inline Enclosure operator/(const Enclosure& a, long b) { return a / Enclosure::exact(b, a.precision()); }
inline Enclosure operator/(long a, const Enclosure& b) { return Enclosure::exact(a, b.precision()) / b; }

/// num/den as an exact rational point enclosure.
Enclosure rational(long num, long den, mpfr_prec_t prec = kPrecDefault);

// Certified enclosures of the transcendental constants the formulas need.
Enclosure log2_enclosure(mpfr_prec_t prec = kPrecDefault);
Enclosure pi_enclosure(mpfr_prec_t prec = kPrecDefault);
Enclosure log_sqrt_2pi(mpfr_prec_t prec = kPrecDefault);

/// Euler-Mascheroni constant from a 60-significant-digit literal
/// (OEIS A001620 / Sloane-Plouffe digits), widened by 1e-59 on each side
/// to cover the truncation of the literal.
Enclosure euler_gamma(mpfr_prec_t prec = kPrecDefault);

}  // namespace minkphi
