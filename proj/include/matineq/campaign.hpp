#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matineq/checks.hpp"
#include "matineq/io.hpp"

namespace matineq {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnknownCheck : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckInfo {
    std::string id;
    std::string statement;
    std::string hypotheses;
    bool norm_family;  // evaluated once per norm kind in the test family
};

/// Stable check registry; ids appear in CLI flags and report rows.
const std::vector<CheckInfo>& check_registry();
const CheckInfo& check_info(const std::string& id);

enum class ReportFormat { Csv, Json };

struct CampaignConfig {
    std::vector<std::string> checks;       // resolved ids, nonempty
    std::size_t trials = 200;
    std::vector<std::size_t> dims = {1, 2, 3, 4, 6};
    double tol = 1e-8;
    double cond_cap = 100.0;
    std::uint64_t seed = 0;
    std::string out_path;                  // empty: stdout
    ReportFormat format = ReportFormat::Csv;
    std::string witness_dir;               // empty: failure witnesses not dumped
};

struct CampaignRow {
    InequalityCase kase;
    std::size_t dim = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    bool skipped = false;
    std::string skip_reason;
};

struct CheckSummary {
    std::size_t runs = 0, passes = 0, failures = 0, skips = 0;
    double min_slack = 0.0;
    double min_rel_slack = 0.0;
    std::uint64_t argmin_seed = 0;
    std::size_t argmin_dim = 0, argmin_trial = 0;
};

struct SuiteReport {
    std::map<std::string, CheckSummary> per_check;
    std::vector<CampaignRow> rows;
    std::size_t failures = 0;
    double wall_seconds = 0.0;
};

/// Evaluation of one trial: the witness, drawn parameters, and one case per
/// applicable norm kind. Pure function of (check, dim, seed).
struct TrialOutcome {
    std::vector<InequalityCase> cases;
    Witness witness;
    std::map<std::string, double> params;
    bool skipped = false;
    std::string skip_reason;
};

TrialOutcome evaluate_trial(const std::string& check_id, std::size_t dim, std::uint64_t seed,
                            double tol, double cond_cap, std::size_t falsify_budget = 1000);

/// Re-evaluates a check on explicitly supplied matrices/parameters; the
/// dispatcher shared by the campaign and witness replay.
InequalityCase evaluate_on_witness(const std::string& check_id, const Witness& w,
                                   const std::map<std::string, double>& params,
                                   const std::string& norm_kind, double tol);

SuiteReport run_campaign(const CampaignConfig& config);

std::string report_to_csv(const SuiteReport& report);
std::string report_to_json(const SuiteReport& report, const CampaignConfig& config);

/// Writes one witness JSON file; returns the path.
std::string dump_witness(const std::string& dir, const CampaignRow& row, const Witness& w,
                         double tol);

/// Loads a witness file and re-evaluates its check.
struct ReplayResult {
    InequalityCase kase;
    double stored_lhs = 0.0;
    double stored_rhs = 0.0;
    bool reproduced = false;
};
ReplayResult replay_witness(const std::string& path);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace matineq
