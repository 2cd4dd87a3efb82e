#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "minkphi/bound_report.hpp"

namespace minkphi {

struct CampaignOptions {
    long long from = 0;   // 0 -> campaign default
    long long to = 0;     // 0 -> campaign default
    unsigned threads = 0; // 0 -> hardware concurrency
    // oracle_gcd only:
    long long dimension = 0;  // single n to scan (0 -> range over from..to)
    long long modulus_max = 500;
    bool full_scan = false;   // disable the early-stop heuristic
};

/// One verification campaign, fully reduced: ordered per-point reports
/// plus counts and the reconciliation against what is expected to hold.
struct CampaignSummary {
    std::string name;
    long long from = 0;
    long long to = 0;
    std::size_t checked = 0;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t inconclusive = 0;
    std::vector<long long> expected_failures;    // designed exceptions in range
    std::vector<long long> unexpected_failures;  // anything else that failed
    std::vector<long long> inconclusive_points;
    bool ok = false;  // fails == designed exceptions and nothing undecided
    double wall_ms = 0.0;
    std::vector<BoundReport> reports;  // ordered by n
};

/// Campaign ids: theorem1, nice_bounds, phi_prop1, phi_thm2, phi_loglog,
/// oracle_gcd, c_positivity. Unknown names throw std::invalid_argument;
/// infeasible ranges throw std::length_error.
CampaignSummary run_campaign(const std::string& name, CampaignOptions opts = {});

const std::vector<std::string>& campaign_names();

/// Stable record stream: one CSV row per report, ordered by n, no timing.
/// Columns: campaign,n,status,precision,lhs_lo,lhs_hi,rhs_lo,rhs_hi,note
void write_records_csv(std::ostream& out, const std::vector<BoundReport>& reports,
                       int digits = 17);

/// Summary as a single JSON object. wall_ms is the only field that varies
/// between identical runs.
std::string summary_json(const CampaignSummary& s);

}  // namespace minkphi
