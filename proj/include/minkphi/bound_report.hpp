#pragma once

#include <string>
#include <utility>

#include "minkphi/enclosure.hpp"

namespace minkphi {

enum class BoundStatus { Holds, Fails, Inconclusive };

inline const char* to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Holds: return "holds";
        case BoundStatus::Fails: return "fails";
        default: return "inconclusive";
    }
}

/// Outcome record of one verified inequality at one point. A `holds`
/// status certifies compare(lhs, rhs) == LessCertain at precision_used;
/// `inconclusive` means the comparison stayed undecided at the top of
/// the precision ladder (it is never silently coerced).
struct BoundReport {
    std::string campaign;
    long long n = 0;
    Enclosure lhs;
    Enclosure rhs;
    BoundStatus status = BoundStatus::Inconclusive;
    mpfr_prec_t precision_used = 0;
    std::string note;
};

/// Certify the claim lhs < rhs, escalating the working precision through
/// the ladder. `eval` maps a precision to the (lhs, rhs) pair evaluated
/// at that precision.
template <typename EvalFn>
BoundReport certify_less(std::string campaign, long long n, EvalFn&& eval) {
    BoundReport rep;
    rep.campaign = std::move(campaign);
    rep.n = n;
    for (mpfr_prec_t prec : kPrecLadder) {
        auto [lhs, rhs] = eval(prec);
        Cmp c = compare(lhs, rhs);
        rep.lhs = std::move(lhs);
        rep.rhs = std::move(rhs);
        rep.precision_used = prec;
        if (c == Cmp::LessCertain) {
            rep.status = BoundStatus::Holds;
            return rep;
        }
        if (c == Cmp::GreaterCertain) {
            rep.status = BoundStatus::Fails;
            return rep;
        }
    }
    rep.status = BoundStatus::Inconclusive;
    return rep;
}

/// Certify lower < mid && mid < upper (a two-sided sandwich). The stored
/// lhs/rhs pair is the binding side: (mid, upper) when everything holds,
/// otherwise the side that failed or stayed undecided.
template <typename EvalFn>
BoundReport certify_sandwich(std::string campaign, long long n, EvalFn&& eval) {
    BoundReport rep;
    rep.campaign = std::move(campaign);
    rep.n = n;
    for (mpfr_prec_t prec : kPrecLadder) {
        auto [lower, mid, upper] = eval(prec);
        Cmp cl = compare(lower, mid);
        Cmp cu = compare(mid, upper);
        rep.precision_used = prec;
        if (cl == Cmp::GreaterCertain) {
            rep.lhs = std::move(lower);
            rep.rhs = std::move(mid);
            rep.status = BoundStatus::Fails;
            rep.note = "lower";
            return rep;
        }
        if (cu == Cmp::GreaterCertain) {
            rep.lhs = std::move(mid);
            rep.rhs = std::move(upper);
            rep.status = BoundStatus::Fails;
            rep.note = "upper";
            return rep;
        }
        if (cl == Cmp::LessCertain && cu == Cmp::LessCertain) {
            rep.lhs = std::move(mid);
            rep.rhs = std::move(upper);
            rep.status = BoundStatus::Holds;
            return rep;
        }
        if (cl != Cmp::LessCertain) {
            rep.lhs = std::move(lower);
            rep.rhs = std::move(mid);
            rep.note = "lower";
        } else {
            rep.lhs = std::move(mid);
            rep.rhs = std::move(upper);
            rep.note = "upper";
        }
    }
    rep.status = BoundStatus::Inconclusive;
    return rep;
}

}  // namespace minkphi
