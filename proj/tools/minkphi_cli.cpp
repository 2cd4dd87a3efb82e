// minkphi command line: exact G/H/Phi values, certified enclosures,
// figure data, and the verification campaigns.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "minkphi/constants.hpp"
#include "minkphi/minkowski.hpp"
#include "minkphi/oracle.hpp"
#include "minkphi/primes.hpp"
#include "minkphi/totient.hpp"
#include "minkphi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

// Single plot value: the enclosure must be far tighter than the printed
// precision, so its midpoint is a faithful decimal.
std::string plot_value(const minkphi::Enclosure& e, int digits) {
    std::string lo = e.lo_string(digits);
    std::string hi = e.hi_string(digits);
    if (lo == hi) return lo;
    // widen by one digit of slack; enclosure widths here are ~1e-30
    return e.lo_string(digits - 1);
}

int cmd_compute(const std::string& fn, std::uint64_t n, std::uint64_t cutoff,
                int digits) {
    using namespace minkphi;
    if (fn == "g") {
        std::cout << g_exact(n).second.get_str() << "\n";
    } else if (fn == "h") {
        std::cout << h_exact(n).get_str() << "\n";
    } else if (fn == "phi") {
        std::cout << phi_of(n) << "\n";
    } else if (fn == "logg") {
        std::cout << log_g(n, 128).to_string(digits) << "\n";
    } else if (fn == "logh") {
        Enclosure v = log_g(2 * n, 128) -
                      Enclosure::exact(static_cast<long>(n - 1), 128) * log2_enclosure(128);
        std::cout << v.to_string(digits) << "\n";
    } else if (fn == "k") {
        std::cout << k_enclosure(cutoff, 128).value.to_string(digits) << "\n";
    } else {
        std::cerr << "unknown function: " << fn << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_figure(std::uint64_t from, std::uint64_t to, const std::string& out_path,
               int digits) {
    using namespace minkphi;
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open " << out_path << "\n";
            return kExitClaimFailure;
        }
        out = &file;
    }
    const mpfr_prec_t prec = 128;
    (*out) << "n,logG,main,lower,upper,silverberg\n";
    for (std::uint64_t n = from; n <= to; ++n) {
        Enclosure lg = log_g(n, prec);
        Theorem1Bounds b = theorem1_bounds(n, prec);
        Enclosure en = Enclosure::exact(static_cast<long>(n), prec);
        Enclosure silver = en * log(rational(631, 100, prec) * en);
        (*out) << n << ',' << plot_value(lg, digits) << ','
               << plot_value(b.main, digits) << ','
               << plot_value(b.main + b.lower, digits) << ','
               << plot_value(b.main + b.upper, digits) << ','
               << plot_value(silver, digits) << "\n";
    }
    return kExitOk;
}

int cmd_table() {
    std::cout << "n,phi\n";
    for (std::uint64_t n : minkphi::loglog_exception_set())
        std::cout << n << ',' << minkphi::phi_of(n) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& campaign, minkphi::CampaignOptions opts,
               const std::string& format, const std::string& records_path,
               int digits) {
    using namespace minkphi;
    CampaignSummary s = run_campaign(campaign, opts);
    if (!records_path.empty()) {
        std::ofstream file(records_path);
        if (!file) {
            std::cerr << "cannot open " << records_path << "\n";
            return kExitClaimFailure;
        }
        write_records_csv(file, s.reports, digits);
    }
    if (format == "csv") {
        write_records_csv(std::cout, s.reports, digits);
    } else {
        std::cout << summary_json(s) << "\n";
    }
    if (!s.unexpected_failures.empty() || (!s.ok && s.inconclusive == 0)) {
        for (const auto& rep : s.reports) {
            if (rep.status != BoundStatus::Fails) continue;
            bool expected = false;
            for (long long e : s.expected_failures) expected |= (e == rep.n);
            if (expected) continue;
            std::cerr << "FAIL " << rep.campaign << " n=" << rep.n
                      << " lhs=" << rep.lhs.to_string(digits)
                      << " rhs=" << rep.rhs.to_string(digits) << "\n";
            break;
        }
        return kExitClaimFailure;
    }
    if (s.inconclusive > 0) return kExitInconclusive;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Minkowski group-order bounds G(n), H(n), totient maxima Phi(n), "
                 "and certified verification campaigns"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "print one value exactly or as an enclosure");
    std::string fn;
    std::uint64_t n = 0;
    std::uint64_t cutoff = 1000000;
    int digits = 12;
    compute->add_option("function", fn, "one of g, h, phi, logg, logh, k")->required();
    compute->add_option("n", n, "argument (omit for k)");
    compute->add_option("--cutoff", cutoff, "prime cutoff for k (default 1e6)");
    compute->add_option("--digits", digits, "decimal digits for enclosures (default 12)");

    // figure
    auto* figure = app.add_subcommand("figure", "emit log G(n) curve data as CSV");
    std::uint64_t fig_from = 2, fig_to = 1500;
    std::string fig_out;
    int fig_digits = 12;
    figure->add_option("--from", fig_from, "first n (default 2, min 2)");
    figure->add_option("--to", fig_to, "last n (default 1500, max 3000)");
    figure->add_option("--out", fig_out, "output path (default stdout)");
    figure->add_option("--digits", fig_digits, "decimal digits (default 12)");

    // table
    app.add_subcommand("table", "print the Phi(n) exception-set table");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string campaign, format = "json", records_path;
    minkphi::CampaignOptions opts;
    int rec_digits = 17;
    verify->add_option("campaign", campaign,
                       "one of: theorem1, nice_bounds, phi_prop1, phi_thm2, "
                       "phi_loglog, oracle_gcd, c_positivity")->required();
    verify->add_option("--from", opts.from, "range start (campaign default otherwise)");
    verify->add_option("--to", opts.to, "range end (campaign default otherwise)");
    verify->add_option("--threads", opts.threads, "worker cap (default: hardware)");
    verify->add_option("--n", opts.dimension, "oracle_gcd: single dimension to scan");
    verify->add_option("--nmax", opts.modulus_max, "oracle_gcd: modulus ceiling (default 500)");
    verify->add_flag("--full-scan", opts.full_scan, "oracle_gcd: disable early stop");
    verify->add_option("--format", format, "json (summary) or csv (records)")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--records", records_path, "also write records CSV to this path");
    verify->add_option("--precision", rec_digits,
                       "decimal digits for printed enclosures (default 17)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            if (fn != "k" && n == 0) {
                std::cerr << "compute " << fn << " requires n >= 1\n";
                return kExitUsage;
            }
            return cmd_compute(fn, n, cutoff, digits);
        }
        if (figure->parsed()) {
            if (fig_from < 2 || fig_to > 3000 || fig_from > fig_to) {
                std::cerr << "figure range must satisfy 2 <= from <= to <= 3000\n";
                return kExitUsage;
            }
            return cmd_figure(fig_from, fig_to, fig_out, fig_digits);
        }
        if (app.got_subcommand("table")) return cmd_table();
        if (verify->parsed())
            return cmd_verify(campaign, opts, format, records_path, rec_digits);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "size error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaimFailure;
    }
    return kExitUsage;
}
