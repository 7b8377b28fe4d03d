#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "matineq/campaign.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_run(const std::string& checks_arg, std::size_t trials, const std::string& dims_arg,
            std::uint64_t seed, double tol, double cond_cap, const std::string& format,
            const std::string& out_path, const std::string& witness_dir) {
    using namespace matineq;
    CampaignConfig cfg;
    if (checks_arg == "all") {
        for (const auto& c : check_registry()) cfg.checks.push_back(c.id);
    } else {
        cfg.checks = split_csv(checks_arg);
    }
    cfg.trials = trials;
    if (!dims_arg.empty()) {
        cfg.dims.clear();
        for (const auto& d : split_csv(dims_arg)) cfg.dims.push_back(std::stoul(d));
    }
    cfg.seed = seed;
    cfg.tol = tol;
    cfg.cond_cap = cond_cap;
    cfg.out_path = out_path;
    cfg.witness_dir = witness_dir;
    if (format == "csv")
        cfg.format = ReportFormat::Csv;
    else if (format == "json")
        cfg.format = ReportFormat::Json;
    else
        throw ConfigError("format must be csv or json");

    const SuiteReport report = run_campaign(cfg);
    const std::string text =
        cfg.format == ReportFormat::Csv ? report_to_csv(report) : report_to_json(report, cfg);
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw IoError("cannot write report to " + cfg.out_path);
        f << text;
    }

    for (const auto& [id, s] : report.per_check) {
        std::fprintf(stderr, "%-20s runs=%zu passes=%zu failures=%zu skips=%zu min_slack=%.3e\n",
                     id.c_str(), s.runs, s.passes, s.failures, s.skips, s.min_slack);
    }
    return report.failures == 0 ? 0 : 1;
}

int cmd_explain(const std::string& id) {
    const auto& info = matineq::check_info(id);
    std::cout << info.id << "\n  claim: " << info.statement
              << "\n  hypotheses: " << info.hypotheses << "\n  norms: "
              << (info.norm_family ? "evaluated across the unitarily invariant norm family"
                                   : "fixed (see claim)")
              << "\n";
    return 0;
}

int cmd_replay(const std::string& path) {
    const auto r = matineq::replay_witness(path);
    std::printf("check: %s\nnorm: %s\nlhs: %.17g (stored %.17g)\nrhs: %.17g (stored %.17g)\n"
                "slack: %.17g\nholds: %s\nreproduced: %s\n",
                r.kase.check_id.c_str(), r.kase.norm_kind.c_str(), r.kase.lhs, r.stored_lhs,
                r.kase.rhs, r.stored_rhs, r.kase.slack, r.kase.holds ? "yes" : "no",
                r.reproduced ? "yes" : "no");
    return r.reproduced ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matineq: randomized verification campaigns for matrix mean inequalities"};
    app.require_subcommand(1);

    std::string checks = "all", dims, format = "csv", out_path, witness_dir;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    double tol = 1e-8, cond_cap = 100.0;

    auto* run = app.add_subcommand("run", "run an inequality campaign");
    run->add_option("--checks", checks, "comma-separated check ids, or 'all'");
    run->add_option("--trials", trials, "trials per (check, dim)");
    run->add_option("--dims", dims, "comma-separated dimensions (default 1,2,3,4,6)");
    run->add_option("--seed", seed, "master seed");
    run->add_option("--tol", tol, "relative slack tolerance");
    run->add_option("--cond-cap", cond_cap, "condition number cap for PD witnesses");
    run->add_option("--format", format, "csv or json");
    run->add_option("--out", out_path, "report path (default stdout)");
    run->add_option("--dump-witnesses", witness_dir, "directory for failure witness files");

    std::string explain_id;
    auto* explain = app.add_subcommand("explain", "describe a check");
    explain->add_option("check_id", explain_id)->required();

    std::string replay_path;
    auto* replay = app.add_subcommand("replay", "re-evaluate a stored witness file");
    replay->add_option("witness", replay_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(checks, trials, dims, seed, tol, cond_cap, format, out_path,
                           witness_dir);
        if (explain->parsed()) return cmd_explain(explain_id);
        if (replay->parsed()) return cmd_replay(replay_path);
    } catch (const matineq::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const matineq::UnknownCheck& e) {
        std::fprintf(stderr, "unknown check: %s\n", e.what());
        return 2;
    } catch (const matineq::ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return 2;
    } catch (const matineq::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
