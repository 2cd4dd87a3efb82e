#include "minkphi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "minkphi/constants.hpp"
#include "minkphi/minkowski.hpp"
#include "minkphi/oracle.hpp"
#include "minkphi/primes.hpp"
#include "minkphi/totient.hpp"

namespace minkphi {

namespace {

unsigned effective_threads(unsigned requested, std::size_t points) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned t = requested ? requested : (hw ? hw : 1);
    return static_cast<unsigned>(std::min<std::size_t>(t, points ? points : 1));
}

// Ordered parallel map: results land at their point's index, so output is
// independent of scheduling.
template <typename Fn>
std::vector<BoundReport> map_points(const std::vector<long long>& points,
                                    unsigned threads, Fn&& fn) {
    std::vector<BoundReport> results(points.size());
    if (points.empty()) return results;
    unsigned workers = effective_threads(threads, points.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) results[i] = fn(points[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                results[i] = fn(points[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

void warm_constant_caches() {
    // Touch the MPFR constant caches and the K master before spawning
    // workers, so threads only read them.
    k_constant(kPrecMax);
    log2_enclosure(kPrecMax + 64);
    pi_enclosure(kPrecMax + 64);
}

std::vector<long long> range_points(long long from, long long to, long long step = 1) {
    std::vector<long long> pts;
    for (long long n = from; n <= to; n += step) pts.push_back(n);
    return pts;
}

struct Defaults {
    long long from;
    long long to;
};

Defaults campaign_defaults(const std::string& name) {
    if (name == "theorem1") return {2, 5000};
    if (name == "nice_bounds") return {1, 2000};
    if (name == "phi_prop1") return {1, 100000};
    if (name == "phi_thm2") return {2, 100000};
    if (name == "phi_loglog") return {3, 102131};
    if (name == "oracle_gcd") return {1, 6};
    if (name == "c_positivity") return {0, -1};  // -1: full grid
    throw std::invalid_argument("unknown campaign: " + name);
}

long long campaign_min_from(const std::string& name) {
    if (name == "theorem1" || name == "phi_thm2") return 2;
    if (name == "phi_loglog") return 3;
    if (name == "c_positivity") return 0;
    return 1;
}

CampaignSummary run_theorem1(long long from, long long to, unsigned threads) {
    CampaignSummary s;
    auto pts = range_points(from, to);
    s.reports = map_points(pts, threads, [](long long n) {
        return certify_sandwich("theorem1", n, [n](mpfr_prec_t prec) {
            auto nn = static_cast<std::uint64_t>(n);
            Theorem1Bounds b = theorem1_bounds(nn, prec);
            return std::tuple{b.main + b.lower, log_g(nn, prec), b.main + b.upper};
        });
    });
    return s;
}

CampaignSummary run_nice_bounds(long long from, long long to, unsigned threads) {
    CampaignSummary s;
    auto pts = range_points(from, to);
    s.reports = map_points(pts, threads, [](long long n) {
        auto subs = nice_bounds_check(static_cast<std::uint64_t>(n));
        BoundReport rep;
        rep.campaign = "nice_bounds";
        rep.n = n;
        rep.status = BoundStatus::Holds;
        for (const auto& sub : subs) {
            rep.precision_used = std::max(rep.precision_used, sub.precision_used);
            if (!sub.note.empty()) {
                if (!rep.note.empty()) rep.note += ";";
                rep.note += sub.campaign + ":" + sub.note;
            }
            if (sub.status == BoundStatus::Fails && rep.status != BoundStatus::Fails) {
                rep.status = BoundStatus::Fails;
                rep.lhs = sub.lhs;
                rep.rhs = sub.rhs;
            } else if (sub.status == BoundStatus::Inconclusive &&
                       rep.status == BoundStatus::Holds) {
                rep.status = BoundStatus::Inconclusive;
                rep.lhs = sub.lhs;
                rep.rhs = sub.rhs;
            }
        }
        if (rep.status == BoundStatus::Holds && !subs.empty()) {
            rep.lhs = subs.back().lhs;
            rep.rhs = subs.back().rhs;
        }
        return rep;
    });
    return s;
}

CampaignSummary run_phi_prop1(long long from, long long to, unsigned threads) {
    CampaignSummary s;
    auto phis = phi_bulk(static_cast<std::uint64_t>(to));
    std::vector<mpq_class> ratios;  // index by t; covers t <= nu_2(n) + 2 for n <= to
    for (std::uint64_t t = 0; (std::uint64_t(1) << t) <= 4 * static_cast<std::uint64_t>(to); ++t)
        ratios.push_back(t == 0 ? mpq_class(0) : prime_product_ratio(t));
    auto pts = range_points(from, to);
    s.reports = map_points(pts, threads, [&](long long n) {
        auto nn = static_cast<std::uint64_t>(n);
        std::uint64_t t = p_adic_valuation(nn, 2) + 2;
        mpq_class bound = ratios.at(t) * 2 * mpz_class(static_cast<unsigned long>(nn));
        mpq_class phi_q(static_cast<unsigned long>(phis[nn]));
        BoundReport rep;
        rep.campaign = "phi_prop1";
        rep.n = n;
        rep.lhs = Enclosure::exact(phi_q);
        rep.rhs = Enclosure::exact(bound);
        rep.precision_used = 0;  // exact rational comparison
        if (phi_q < bound) {
            rep.status = BoundStatus::Holds;
        } else if (phi_q == bound) {
            rep.status = BoundStatus::Holds;
            rep.note = "equality";
        } else {
            rep.status = BoundStatus::Fails;
        }
        return rep;
    });
    return s;
}

CampaignSummary run_phi_thm2(long long from, long long to, unsigned threads) {
    CampaignSummary s;
    auto phis = phi_bulk(static_cast<std::uint64_t>(to));
    if (from % 2 != 0) ++from;
    auto pts = range_points(from, to, 2);
    s.reports = map_points(pts, threads, [&](long long n) {
        auto nn = static_cast<std::uint64_t>(n);
        std::uint64_t phi_n = phis[nn];
        if (nn % 16 != 0) {
            // exact: Phi(n) <= 77n/8
            mpq_class bound(77 * mpz_class(static_cast<unsigned long>(nn)), 8);
            bound.canonicalize();
            mpq_class phi_q(static_cast<unsigned long>(phi_n));
            BoundReport rep;
            rep.campaign = "phi_thm2";
            rep.n = n;
            rep.lhs = Enclosure::exact(phi_q);
            rep.rhs = Enclosure::exact(bound);
            rep.precision_used = 0;
            if (phi_q < bound) rep.status = BoundStatus::Holds;
            else if (phi_q == bound) { rep.status = BoundStatus::Holds; rep.note = "equality"; }
            else rep.status = BoundStatus::Fails;
            return rep;
        }
        BoundReport rep = certify_less("phi_thm2", n, [&](mpfr_prec_t prec) {
            return std::pair{Enclosure::exact(static_cast<long>(phi_n), prec),
                             phi_upper_theorem2(nn, prec)};
        });
        return rep;
    });
    return s;
}

CampaignSummary run_phi_loglog(long long from, long long to, unsigned threads) {
    CampaignSummary s;
    auto phis = phi_bulk(static_cast<std::uint64_t>(to));
    auto pts = range_points(from, to);
    s.reports = map_points(pts, threads, [&](long long n) {
        auto nn = static_cast<std::uint64_t>(n);
        return loglog_bound_check(nn, phis[nn]);
    });
    for (std::uint64_t e : loglog_exception_set())
        if (static_cast<long long>(e) >= from && static_cast<long long>(e) <= to)
            s.expected_failures.push_back(static_cast<long long>(e));
    return s;
}

CampaignSummary run_oracle_gcd(const CampaignOptions& opts, long long from, long long to) {
    CampaignSummary s;
    std::vector<long long> pts = opts.dimension > 0
                                     ? std::vector<long long>{opts.dimension}
                                     : range_points(from, to);
    // gl_order growth makes large dimensions slow and pointless here
    for (long long n : pts)
        if (n > 16) throw std::length_error("oracle_gcd: dimension > 16 not supported");
    s.reports = map_points(pts, opts.threads, [&](long long n) {
        auto nn = static_cast<std::uint64_t>(n);
        GcdScan scan = g_by_gcd(nn, static_cast<std::uint64_t>(opts.modulus_max),
                                !opts.full_scan);
        mpz_class expected = g_exact(nn).second;
        BoundReport rep;
        rep.campaign = "oracle_gcd";
        rep.n = n;
        rep.lhs = Enclosure::exact(scan.value);
        rep.rhs = Enclosure::exact(expected);
        rep.precision_used = 0;
        if (scan.value == expected) {
            rep.status = BoundStatus::Holds;
            rep.note = "equality;stabilized_at=" +
                       std::to_string(scan.stabilized_at.value_or(3));
        } else {
            rep.status = BoundStatus::Fails;
        }
        return rep;
    });
    return s;
}

CampaignSummary run_c_positivity(long long from, long long to, unsigned threads) {
    // geometric grid 6, 6.5, ... (ratio 13/12) capped at 1e6, plus 1e6 itself
    std::vector<mpq_class> grid;
    mpq_class t(6);
    while (t <= 1000000) {
        grid.push_back(t);
        t *= mpq_class(13, 12);
    }
    grid.push_back(mpq_class(1000000));
    long long last = static_cast<long long>(grid.size()) - 1;
    if (to < 0 || to > last) to = last;
    if (from < 0) from = 0;
    CampaignSummary s;
    auto pts = range_points(from, to);
    s.reports = map_points(pts, threads, [&](long long k) {
        const mpq_class& tk = grid[static_cast<std::size_t>(k)];
        BoundReport rep = certify_less("c_positivity", k, [&](mpfr_prec_t prec) {
            return std::pair{Enclosure::exact(0L, prec),
                             c_function(Enclosure::exact(tk, prec))};
        });
        rep.note = "t=" + Enclosure::exact(tk, 64).lo_string(10);
        return rep;
    });
    return s;
}

}  // namespace

const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names{
        "theorem1",  "nice_bounds", "phi_prop1",   "phi_thm2",
        "phi_loglog", "oracle_gcd",  "c_positivity"};
    return names;
}

CampaignSummary run_campaign(const std::string& name, CampaignOptions opts) {
    Defaults d = campaign_defaults(name);
    long long from = opts.from > 0 ? opts.from : d.from;
    long long to = opts.to > 0 ? opts.to : d.to;
    if (name != "c_positivity") {
        if (from < campaign_min_from(name))
            throw std::invalid_argument(name + ": range starts below the domain");
        if (to < from) throw std::invalid_argument(name + ": empty range");
    }

    warm_constant_caches();
    auto t0 = std::chrono::steady_clock::now();

    CampaignSummary s;
    if (name == "theorem1") s = run_theorem1(from, to, opts.threads);
    else if (name == "nice_bounds") s = run_nice_bounds(from, to, opts.threads);
    else if (name == "phi_prop1") s = run_phi_prop1(from, to, opts.threads);
    else if (name == "phi_thm2") s = run_phi_thm2(from, to, opts.threads);
    else if (name == "phi_loglog") s = run_phi_loglog(from, to, opts.threads);
    else if (name == "oracle_gcd") s = run_oracle_gcd(opts, from, to);
    else if (name == "c_positivity") s = run_c_positivity(opts.from, opts.to > 0 ? opts.to : -1, opts.threads);
    else throw std::invalid_argument("unknown campaign: " + name);

    s.name = name;
    s.from = from;
    s.to = to;
    s.checked = s.reports.size();
    if (name == "c_positivity" && !s.reports.empty()) {
        s.from = s.reports.front().n;
        s.to = s.reports.back().n;
    }
    for (const auto& rep : s.reports) {
        switch (rep.status) {
            case BoundStatus::Holds: ++s.holds; break;
            case BoundStatus::Fails: ++s.fails; break;
            default: ++s.inconclusive; break;
        }
        if (rep.status == BoundStatus::Inconclusive) s.inconclusive_points.push_back(rep.n);
        if (rep.status == BoundStatus::Fails &&
            std::find(s.expected_failures.begin(), s.expected_failures.end(), rep.n) ==
                s.expected_failures.end())
            s.unexpected_failures.push_back(rep.n);
    }
    bool expected_all_failed = true;
    for (long long e : s.expected_failures) {
        bool found = false;
        for (const auto& rep : s.reports)
            if (rep.n == e && rep.status == BoundStatus::Fails) found = true;
        if (!found) expected_all_failed = false;
    }
    s.ok = s.unexpected_failures.empty() && s.inconclusive == 0 && expected_all_failed;
    s.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
    return s;
}

void write_records_csv(std::ostream& out, const std::vector<BoundReport>& reports,
                       int digits) {
    out << "campaign,n,status,precision,lhs_lo,lhs_hi,rhs_lo,rhs_hi,note\n";
    for (const auto& r : reports) {
        out << r.campaign << ',' << r.n << ',' << to_string(r.status) << ','
            << r.precision_used << ',' << r.lhs.lo_string(digits) << ','
            << r.lhs.hi_string(digits) << ',' << r.rhs.lo_string(digits) << ','
            << r.rhs.hi_string(digits) << ',' << r.note << '\n';
    }
}

std::string summary_json(const CampaignSummary& s) {
    nlohmann::ordered_json j;
    j["campaign"] = s.name;
    j["from"] = s.from;
    j["to"] = s.to;
    j["checked"] = s.checked;
    j["holds"] = s.holds;
    j["fails"] = s.fails;
    j["inconclusive"] = s.inconclusive;
    j["expected_failures"] = s.expected_failures;
    j["unexpected_failures"] = s.unexpected_failures;
    j["inconclusive_points"] = s.inconclusive_points;
    j["ok"] = s.ok;
    j["wall_ms"] = s.wall_ms;
    return j.dump(2);
}

}  // namespace minkphi
