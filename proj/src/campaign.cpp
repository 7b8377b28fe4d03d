#include "matineq/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "matineq/io.hpp"
#include "matineq/randgen.hpp"

namespace matineq {

namespace {

using nlohmann::json;

const std::vector<CheckInfo> kRegistry = {
    {"heinz_double",
     "2|||A^{1/2}XB^{1/2}||| <= |||A^v X B^{1-v} + A^{1-v} X B^v||| <= |||AX+XB|||",
     "A, B positive semidefinite, X arbitrary, v in [0,1], any unitarily invariant norm", true},
    {"heinz_reverse",
     "|||AX+XB||| <= |||A^v X B^{1-v} + A^{1-v} X B^v|||",
     "A, B positive definite, X arbitrary, v outside [0,1]; reverses the classical upper bound",
     true},
    {"hs_refine",
     "||A^v X B^{1-v} + A^{1-v} X B^v||_2^2 + 2 r0 ||AX-XB||_2^2 <= ||AX+XB||_2^2, r0 = min{v,1-v}",
     "A, B positive semidefinite, X arbitrary, v in [0,1], Hilbert-Schmidt norm", false},
    {"hs_reverse",
     "||AX+XB||_2^2 <= ||A^v X B^{1-v} + A^{1-v} X B^v||_2^2 + 2 r0 ||AX-XB||_2^2, r0 = max{v,1-v}",
     "A, B positive semidefinite, X arbitrary, v in [0,1], Hilbert-Schmidt norm", false},
    {"hs_strong_reverse",
     "||AX+XB||_2^2 + 2(v-1)||AX-XB||_2^2 <= ||A^v X B^{1-v} + A^{1-v} X B^v||_2^2",
     "A, B positive definite, X arbitrary, v > 1, Hilbert-Schmidt norm", false},
    {"equality_case",
     "||AX+XB||_2 = ||A^v X B^{1-v} + A^{1-v} X B^v||_2 if and only if AX = XB",
     "A, B positive definite, X arbitrary, v > 1", false},
    {"sv_equality",
     "s_j(A+B) = s_j(A^v B^{1-v} + A^{1-v} B^v) for all j if and only if A = B",
     "A, B positive definite, v > 1", false},
    {"audenaert",
     "s_j(A^v B^{1-v} + A^{1-v} B^v) <= s_j(A+B) for every j",
     "A, B positive semidefinite, v in [0,1]", false},
    {"mcintosh",
     "||A*AX + XB*B|| >= 2||AXB*||",
     "A, B, X arbitrary, any unitarily invariant norm", true},
    {"cpr",
     "||AXA^{-1} + A^{-1}XA|| >= 2||X||",
     "A selfadjoint invertible, X arbitrary, any unitarily invariant norm", true},
    {"power_diff",
     "||A^{2m+n} X B^{-n} + A^{-n} X B^{2m+n}|| >= ||A^{2m} X + X B^{2m}||",
     "A, B selfadjoint invertible, X arbitrary, m,n nonnegative integers", true},
    {"kaur",
     "|||A^v X B^{1-v} + A^{1-v} X B^v||| <= |||4 r1 A^{1/2}XB^{1/2} + (1-2 r1)(AX+XB)|||, "
     "r1 = min{v, |1/2-v|, 1-v}",
     "A, B positive semidefinite, X arbitrary, v in [0,1]", true},
    {"aujla",
     "2|||A^{1/2}XB^{1/2}||| <= |||A^s X B^{1-t} + A^{1-s} X B^t||| <= "
     "max{|||AX+XB|||, |||AXB+X|||}",
     "A, B positive semidefinite, X arbitrary, s,t in [0,1]", true},
    {"op_heinz_reverse",
     "(A+B)/2 <= (A #_{1-v} B + A #_v B)/2 in the Loewner order",
     "A, B positive definite, v outside [0,1]", false},
    {"nege",
     "(A+B)/2 + 2(v-1)((A+B)/2 - A #_{1/2} B) <= (A #_{1-v} B + A #_v B)/2, with equality "
     "iff A = B",
     "A, B positive definite, v > 1", false},
    {"tensor_hadamard",
     "A (x) B^{-1} + A^{-1} (x) B <= A^v (x) B^{-v} + A^{-v} (x) B^v, and the same with the "
     "Hadamard product",
     "A, B positive definite, v > 1", false},
    {"hadamard_heinz",
     "2|||A^{1/2} o B^{1/2}||| <= |||A^s o B^{1-t} + A^{1-s} o B^t||| <= "
     "max{|||(A+B) o I|||, |||(A o B) + I|||}",
     "A, B positive definite, s,t in [0,1]", true},
    {"falsify_heinz",
     "seeded search for a witness violating |||A^v X B^{1-v} + A^{1-v} X B^v||| <= |||AX+XB||| "
     "at v outside [0,1]; success demonstrates the classical upper bound fails there",
     "A, B positive definite, X arbitrary, v outside [0,1]", false},
};

double sample_nu_reverse(Rng& rng) {
    return rng.uniform() < 0.5 ? rng.uniform(1.05, 3.0) : rng.uniform(-2.0, -0.05);
}

Hermitian as_herm(const std::optional<Matrix>& m, const char* which) {
    if (!m) throw ParseError(std::string("witness is missing matrix ") + which);
    return Hermitian::trusted(*m);
}

const Matrix& as_mat(const std::optional<Matrix>& m, const char* which) {
    if (!m) throw ParseError(std::string("witness is missing matrix ") + which);
    return *m;
}

double param(const std::map<std::string, double>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw ParseError("missing parameter " + key);
    return it->second;
}

NormKind kind_or_hs(const std::string& s) {
    if (s.empty()) return NormKind::hilbert_schmidt();
    auto k = NormKind::parse(s);
    if (!k) throw ParseError("bad norm kind: " + s);
    return *k;
}

Matrix random_invertible_hermitian(std::size_t n, Rng& rng) {
    // Push the spectrum away from zero, keeping each eigenvalue's sign.
    const Hermitian h = Hermitian::trusted(random_hermitian(n, rng));
    auto d = hermitian_eig(h);
    Matrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double l = d.eigenvalues[i];
        const double sgn = l >= 0.0 ? 1.0 : -1.0;
        lam(i, i) = sgn * (0.25 + std::abs(l));
    }
    return d.unitary * lam * d.unitary.adjoint();
}

}  // namespace

const std::vector<CheckInfo>& check_registry() { return kRegistry; }

const CheckInfo& check_info(const std::string& id) {
    for (const auto& c : kRegistry)
        if (c.id == id) return c;
    throw UnknownCheck("unknown check id: " + id);
}

InequalityCase evaluate_on_witness(const std::string& check_id, const Witness& w,
                                   const std::map<std::string, double>& params,
                                   const std::string& norm_kind, double tol) {
    const NormKind kind = kind_or_hs(norm_kind);
    if (check_id == "heinz_double")
        return heinz_double_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                  param(params, "nu"), kind, tol);
    if (check_id == "heinz_reverse")
        return heinz_reverse_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                   param(params, "nu"), kind, tol);
    if (check_id == "hs_refine")
        return hs_refinement_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                   param(params, "nu"), tol);
    if (check_id == "hs_reverse")
        return hs_reverse_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                param(params, "nu"), tol);
    if (check_id == "hs_strong_reverse")
        return hs_strong_reverse_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                       param(params, "nu"), tol);
    if (check_id == "equality_case")
        return equality_case_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                   param(params, "nu"), tol);
    if (check_id == "sv_equality")
        return sv_equality_check(as_herm(w.A, "A"), as_herm(w.B, "B"), param(params, "nu"), tol);
    if (check_id == "audenaert")
        return audenaert_sv_check(as_herm(w.A, "A"), as_herm(w.B, "B"), param(params, "nu"), tol);
    if (check_id == "mcintosh")
        return mcintosh_check(as_mat(w.A, "A"), as_mat(w.B, "B"), as_mat(w.X, "X"), kind, tol);
    if (check_id == "cpr")
        return cpr_check(as_herm(w.A, "A"), as_mat(w.X, "X"), kind, tol);
    if (check_id == "power_diff")
        return power_difference_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                      static_cast<int>(param(params, "m")),
                                      static_cast<int>(param(params, "n")), kind, tol);
    if (check_id == "kaur")
        return kaur_refinement_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                     param(params, "nu"), kind, tol);
    if (check_id == "aujla")
        return aujla_bounds_check(as_herm(w.A, "A"), as_herm(w.B, "B"), as_mat(w.X, "X"),
                                  param(params, "s"), param(params, "t"), kind, tol);
    if (check_id == "op_heinz_reverse")
        return operator_heinz_reverse_check(as_herm(w.A, "A"), as_herm(w.B, "B"),
                                            param(params, "nu"), tol);
    if (check_id == "nege")
        return nege_refinement_check(as_herm(w.A, "A"), as_herm(w.B, "B"), param(params, "nu"),
                                     tol);
    if (check_id == "tensor_hadamard")
        return tensor_hadamard_reverse_check(as_herm(w.A, "A"), as_herm(w.B, "B"),
                                             param(params, "nu"), tol);
    if (check_id == "hadamard_heinz")
        return hadamard_heinz_bounds_check(as_herm(w.A, "A"), as_herm(w.B, "B"),
                                           param(params, "s"), param(params, "t"), kind, tol);
    if (check_id == "falsify_heinz") {
        // Direct re-evaluation of the stored violating witness.
        const Hermitian a = as_herm(w.A, "A"), b = as_herm(w.B, "B");
        const Matrix& x = as_mat(w.X, "X");
        const double nu = param(params, "nu");
        const double margin = param(params, "margin");
        const double classical = norm(a.matrix() * x + x * b.matrix(), kind);
        const double h = norm(heinz_term(a, b, x, nu), kind);
        InequalityCase c;
        c.check_id = check_id;
        c.params = params;
        c.norm_kind = kind.to_string();
        c.lhs = classical;
        c.rhs = h;
        c.slack = h - classical;
        c.scale = std::max({1.0, classical, h});
        c.holds = c.slack > margin * c.scale;
        return c;
    }
    throw UnknownCheck("unknown check id: " + check_id);
}

TrialOutcome evaluate_trial(const std::string& check_id, std::size_t dim, std::uint64_t seed,
                            double tol, double cond_cap, std::size_t falsify_budget) {
    const CheckInfo& info = check_info(check_id);
    TrialOutcome out;
    out.witness.seed = seed;
    Rng rng(seed);

    if (check_id == "falsify_heinz") {
        auto c = falsification_check(seed, dim, 2.0, NormKind::hilbert_schmidt(), 0.1,
                                     falsify_budget);
        out.params = c.params;
        if (c.holds) {
            // Reconstruct the winning witness so it can be dumped and replayed.
            const std::uint64_t sub =
                derive_substream(seed, static_cast<std::uint64_t>(c.params.at("found_trial")));
            Rng wrng(sub);
            out.witness.A = random_pd(dim, 100.0, wrng);
            out.witness.B = random_pd(dim, 100.0, wrng);
            out.witness.X = random_general(dim, dim, wrng);
        }
        out.cases.push_back(std::move(c));
        return out;
    }

    // Draw parameters first, matrices second, in a fixed order.
    std::map<std::string, double> p;
    if (check_id == "heinz_double" || check_id == "hs_refine" || check_id == "hs_reverse" ||
        check_id == "audenaert" || check_id == "kaur")
        p["nu"] = rng.uniform();
    else if (check_id == "heinz_reverse" || check_id == "op_heinz_reverse")
        p["nu"] = sample_nu_reverse(rng);
    else if (check_id == "hs_strong_reverse" || check_id == "equality_case" ||
             check_id == "sv_equality" || check_id == "nege" || check_id == "tensor_hadamard")
        p["nu"] = rng.uniform(1.05, 3.0);
    else if (check_id == "aujla" || check_id == "hadamard_heinz") {
        p["s"] = rng.uniform();
        p["t"] = rng.uniform();
    } else if (check_id == "power_diff") {
        p["m"] = std::floor(rng.uniform(0.0, 3.0));
        p["n"] = std::floor(rng.uniform(0.0, 3.0));
    }

    if (check_id == "mcintosh") {
        out.witness.A = random_general(dim, dim, rng);
        out.witness.B = random_general(dim, dim, rng);
        out.witness.X = random_general(dim, dim, rng);
    } else if (check_id == "cpr") {
        out.witness.A = random_invertible_hermitian(dim, rng);
        out.witness.X = random_general(dim, dim, rng);
    } else if (check_id == "power_diff") {
        out.witness.A = random_invertible_hermitian(dim, rng);
        out.witness.B = random_invertible_hermitian(dim, rng);
        out.witness.X = random_general(dim, dim, rng);
    } else if (check_id == "equality_case" && (seed & 1u) == 0u) {
        // Commuting construction: B = A, X drawn from A's commutant.
        const Matrix u = dim == 1 ? Matrix::identity(1) : random_unitary(dim, rng);
        Matrix lam(dim, dim), xd(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            lam(i, i) = std::exp(rng.uniform(-2.3, 2.3));
            xd(i, i) = rng.complex_gaussian();
        }
        out.witness.A = u * lam * u.adjoint();
        out.witness.B = *out.witness.A;
        out.witness.X = u * xd * u.adjoint();
    } else if (check_id == "sv_equality" && (seed & 1u) == 0u) {
        GenSpec gs{dim, GenKind::EqualPair, 0, cond_cap, rng.next_u64()};
        auto [a, b] = generate_pair(gs);
        out.witness.A = std::move(a);
        out.witness.B = std::move(b);
    } else {
        out.witness.A = random_pd(dim, cond_cap, rng);
        out.witness.B = random_pd(dim, cond_cap, rng);
        const bool needs_x = check_id != "sv_equality" && check_id != "audenaert" &&
                             check_id != "op_heinz_reverse" && check_id != "nege" &&
                             check_id != "tensor_hadamard" && check_id != "hadamard_heinz";
        if (needs_x) out.witness.X = random_general(dim, dim, rng);
    }

    out.params = p;
    try {
        if (info.norm_family) {
            for (const auto& kind : norm_test_family(dim))
                out.cases.push_back(
                    evaluate_on_witness(check_id, out.witness, p, kind.to_string(), tol));
        } else {
            out.cases.push_back(evaluate_on_witness(check_id, out.witness, p, "", tol));
        }
    } catch (const NotPositiveDefinite& e) {
        out.skipped = true;
        out.skip_reason = e.what();
        out.cases.clear();
    } catch (const ParamOutOfRange& e) {
        out.skipped = true;
        out.skip_reason = e.what();
        out.cases.clear();
    }
    return out;
}

SuiteReport run_campaign(const CampaignConfig& config) {
    if (config.checks.empty()) throw ConfigError("no checks selected");
    if (config.trials < 1) throw ConfigError("trials must be >= 1");
    if (config.tol <= 0.0) throw ConfigError("tol must be positive");
    if (config.dims.empty()) throw ConfigError("no dimensions selected");
    for (auto d : config.dims)
        if (d < 1 || d > 16) throw ConfigError("dims must lie in [1,16]");
    for (const auto& id : config.checks) check_info(id);  // throws UnknownCheck

    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport report;

    for (const auto& id : config.checks) {
        std::size_t check_idx = 0;
        for (; check_idx < kRegistry.size(); ++check_idx)
            if (kRegistry[check_idx].id == id) break;
        const std::uint64_t check_seed = derive_substream(config.seed, check_idx);
        auto& summary = report.per_check[id];

        for (std::size_t dim : config.dims) {
            const std::uint64_t dim_seed = derive_substream(check_seed, dim);
            const std::size_t trials = (id == "falsify_heinz") ? 1 : config.trials;
            for (std::size_t trial = 0; trial < trials; ++trial) {
                const std::uint64_t trial_seed = derive_substream(dim_seed, trial);
                auto outcome = evaluate_trial(id, dim, trial_seed, config.tol, config.cond_cap,
                                              config.trials);
                if (outcome.skipped) {
                    summary.runs++;
                    summary.skips++;
                    CampaignRow row;
                    row.kase.check_id = id;
                    row.dim = dim;
                    row.trial = trial;
                    row.seed = trial_seed;
                    row.skipped = true;
                    row.skip_reason = outcome.skip_reason;
                    report.rows.push_back(std::move(row));
                    continue;
                }
                for (auto& c : outcome.cases) {
                    summary.runs++;
                    if (c.holds)
                        summary.passes++;
                    else
                        summary.failures++;
                    const double rel = c.slack / c.scale;
                    if (summary.passes + summary.failures == 1 || rel < summary.min_rel_slack) {
                        summary.min_rel_slack = rel;
                        summary.min_slack = c.slack;
                        summary.argmin_seed = trial_seed;
                        summary.argmin_dim = dim;
                        summary.argmin_trial = trial;
                    }
                    CampaignRow row;
                    row.kase = c;
                    row.dim = dim;
                    row.trial = trial;
                    row.seed = trial_seed;
                    report.rows.push_back(std::move(row));
                    if (!c.holds && !config.witness_dir.empty())
                        dump_witness(config.witness_dir, report.rows.back(), outcome.witness,
                                     config.tol);
                }
            }
        }
        report.failures += summary.failures;
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const CampaignRow& a, const CampaignRow& b) {
                  return std::tie(a.kase.check_id, a.dim, a.trial, a.kase.norm_kind) <
                         std::tie(b.kase.check_id, b.dim, b.trial, b.kase.norm_kind);
              });

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string param_or_empty(const std::map<std::string, double>& p, const char* key) {
    auto it = p.find(key);
    return it == p.end() ? std::string{} : fmt_double(it->second);
}

}  // namespace

std::string report_to_csv(const SuiteReport& report) {
    std::string out = "check_id,dim,trial,seed,nu,s,t,norm_kind,lhs,rhs,slack,scale,holds\n";
    for (const auto& row : report.rows) {
        if (row.skipped) continue;
        const auto& c = row.kase;
        out += c.check_id;
        out += ',';
        out += std::to_string(row.dim);
        out += ',';
        out += std::to_string(row.trial);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += param_or_empty(c.params, "nu");
        out += ',';
        out += param_or_empty(c.params, "s");
        out += ',';
        out += param_or_empty(c.params, "t");
        out += ',';
        out += c.norm_kind;
        out += ',';
        out += fmt_double(c.lhs);
        out += ',';
        out += fmt_double(c.rhs);
        out += ',';
        out += fmt_double(c.slack);
        out += ',';
        out += fmt_double(c.scale);
        out += ',';
        out += c.holds ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string report_to_json(const SuiteReport& report, const CampaignConfig& config) {
    json j;
    j["version"] = kVersion;
    j["wall_seconds"] = report.wall_seconds;
    j["config"] = {{"checks", config.checks},      {"trials", config.trials},
                   {"dims", config.dims},          {"tol", config.tol},
                   {"cond_cap", config.cond_cap},  {"seed", config.seed}};
    json per_check = json::object();
    for (const auto& [id, s] : report.per_check) {
        per_check[id] = {{"runs", s.runs},
                         {"passes", s.passes},
                         {"failures", s.failures},
                         {"skips", s.skips},
                         {"min_slack", s.min_slack},
                         {"min_rel_slack", s.min_rel_slack},
                         {"argmin_seed", s.argmin_seed},
                         {"argmin_dim", s.argmin_dim},
                         {"argmin_trial", s.argmin_trial}};
    }
    j["per_check"] = std::move(per_check);
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = {{"check_id", row.kase.check_id}, {"dim", row.dim},
                  {"trial", row.trial},            {"seed", row.seed},
                  {"norm_kind", row.kase.norm_kind}};
        if (row.skipped) {
            r["skipped"] = true;
            r["skip_reason"] = row.skip_reason;
        } else {
            r["lhs"] = row.kase.lhs;
            r["rhs"] = row.kase.rhs;
            r["slack"] = row.kase.slack;
            r["scale"] = row.kase.scale;
            r["holds"] = row.kase.holds;
            r["params"] = row.kase.params;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string dump_witness(const std::string& dir, const CampaignRow& row, const Witness& w,
                         double tol) {
    std::filesystem::create_directories(dir);
    std::string kind = row.kase.norm_kind;
    std::replace(kind.begin(), kind.end(), ':', '-');
    if (kind.empty()) kind = "none";
    const std::string path = dir + "/" + row.kase.check_id + "_d" + std::to_string(row.dim) +
                             "_t" + std::to_string(row.trial) + "_" + kind + ".json";
    json j;
    j["version"] = kVersion;
    j["check_id"] = row.kase.check_id;
    j["dim"] = row.dim;
    j["trial"] = row.trial;
    j["seed"] = row.seed;
    j["params"] = row.kase.params;
    j["norm_kind"] = row.kase.norm_kind;
    j["lhs"] = row.kase.lhs;
    j["rhs"] = row.kase.rhs;
    j["tol"] = tol;
    if (w.A) j["A"] = matrix_to_json(*w.A);
    if (w.B) j["B"] = matrix_to_json(*w.B);
    if (w.X) j["X"] = matrix_to_json(*w.X);
    std::ofstream f(path);
    if (!f) throw IoError("cannot write witness file " + path);
    f << j.dump(2) << "\n";
    return path;
}

ReplayResult replay_witness(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open witness file " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad witness json: ") + e.what());
    }
    try {
        ReplayResult r;
        const std::string check_id = j.at("check_id").get<std::string>();
        check_info(check_id);
        Witness w;
        if (j.contains("A")) w.A = matrix_from_json(j.at("A"));
        if (j.contains("B")) w.B = matrix_from_json(j.at("B"));
        if (j.contains("X")) w.X = matrix_from_json(j.at("X"));
        if (j.contains("seed")) w.seed = j.at("seed").get<std::uint64_t>();
        std::map<std::string, double> params;
        if (j.contains("params")) params = j.at("params").get<std::map<std::string, double>>();
        const std::string kind = j.value("norm_kind", std::string{});
        const double tol = j.value("tol", 1e-8);
        r.kase = evaluate_on_witness(check_id, w, params, kind, tol);
        r.stored_lhs = j.value("lhs", r.kase.lhs);
        r.stored_rhs = j.value("rhs", r.kase.rhs);
        const double scale = std::max({1.0, std::abs(r.stored_lhs), std::abs(r.stored_rhs)});
        r.reproduced = std::abs(r.kase.lhs - r.stored_lhs) <= 1e-12 * scale &&
                       std::abs(r.kase.rhs - r.stored_rhs) <= 1e-12 * scale;
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad witness json: ") + e.what());
    }
}

}  // namespace matineq
