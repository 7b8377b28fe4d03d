#include "matineq/checks.hpp"

#include <algorithm>
#include <cmath>

#include "matineq/randgen.hpp"

namespace matineq {

namespace {

InequalityCase make_case(std::string id, double lhs, double rhs, double tol,
                         std::map<std::string, double> params, std::string kind = {}) {
    InequalityCase c;
    c.check_id = std::move(id);
    c.params = std::move(params);
    c.norm_kind = std::move(kind);
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = rhs - lhs;
    c.scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    c.holds = c.slack >= -tol * c.scale;
    return c;
}

// The tighter of several (lhs, rhs) claims measured by relative slack.
InequalityCase tightest(std::string id, const std::vector<std::pair<double, double>>& sides,
                        double tol, std::map<std::string, double> params, std::string kind = {}) {
    InequalityCase best;
    bool first = true;
    for (const auto& [lhs, rhs] : sides) {
        auto c = make_case(id, lhs, rhs, tol, params, kind);
        if (first || c.slack / c.scale < best.slack / best.scale) best = c;
        first = false;
    }
    best.holds = true;
    for (const auto& [lhs, rhs] : sides) {
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        if (rhs - lhs < -tol * scale) best.holds = false;
    }
    return best;
}

Matrix sum_with(const Hermitian& a, const Hermitian& b, const Matrix& x) {
    return a.matrix() * x + x * b.matrix();
}

Matrix diff_with(const Hermitian& a, const Hermitian& b, const Matrix& x) {
    return a.matrix() * x - x * b.matrix();
}

// Loewner claims report min eigenvalue of (rhs - lhs) as the slack; the
// scale is the larger operator norm of the two sides.
InequalityCase loewner_case(std::string id, const Hermitian& lhs, const Hermitian& rhs,
                            double tol, std::map<std::string, double> params) {
    InequalityCase c;
    c.check_id = std::move(id);
    c.params = std::move(params);
    c.slack = min_eigenvalue(rhs - lhs);
    c.lhs = operator_norm(lhs.matrix());
    c.rhs = operator_norm(rhs.matrix());
    c.scale = std::max({1.0, c.lhs, c.rhs});
    c.holds = c.slack >= -tol * c.scale;
    return c;
}

}  // namespace

Matrix heinz_term(const Hermitian& a, const Hermitian& b, const Matrix& x, double nu) {
    const Hermitian a_nu = fractional_power(a, nu);
    const Hermitian a_cnu = fractional_power(a, 1.0 - nu);
    const Hermitian b_nu = fractional_power(b, nu);
    const Hermitian b_cnu = fractional_power(b, 1.0 - nu);
    return a_nu.matrix() * x * b_cnu.matrix() + a_cnu.matrix() * x * b_nu.matrix();
}

InequalityCase heinz_double_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                  double nu, const NormKind& kind, double tol) {
    if (nu < 0.0 || nu > 1.0) throw ParamOutOfRange("heinz_double needs nu in [0,1]");
    const Hermitian ah = fractional_power(a, 0.5);
    const Hermitian bh = fractional_power(b, 0.5);
    const double low = 2.0 * norm(ah.matrix() * x * bh.matrix(), kind);
    const double mid = norm(heinz_term(a, b, x, nu), kind);
    const double high = norm(sum_with(a, b, x), kind);
    return tightest("heinz_double", {{low, mid}, {mid, high}}, tol, {{"nu", nu}},
                    kind.to_string());
}

InequalityCase heinz_reverse_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                   double nu, const NormKind& kind, double tol) {
    if (nu >= 0.0 && nu <= 1.0) throw ParamOutOfRange("heinz_reverse needs nu outside [0,1]");
    const double lhs = norm(sum_with(a, b, x), kind);
    const double rhs = norm(heinz_term(a, b, x, nu), kind);
    return make_case("heinz_reverse", lhs, rhs, tol, {{"nu", nu}}, kind.to_string());
}

InequalityCase hs_refinement_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                   double nu, double tol) {
    if (nu < 0.0 || nu > 1.0) throw ParamOutOfRange("hs_refine needs nu in [0,1]");
    const double r0 = std::min(nu, 1.0 - nu);
    const double lhs = hs_norm_sq(heinz_term(a, b, x, nu)) +
                       2.0 * r0 * hs_norm_sq(diff_with(a, b, x));
    const double rhs = hs_norm_sq(sum_with(a, b, x));
    return make_case("hs_refine", lhs, rhs, tol, {{"nu", nu}, {"r0", r0}}, "hs");
}

InequalityCase hs_reverse_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                double nu, double tol) {
    if (nu < 0.0 || nu > 1.0) throw ParamOutOfRange("hs_reverse needs nu in [0,1]");
    const double r0 = std::max(nu, 1.0 - nu);
    const double lhs = hs_norm_sq(sum_with(a, b, x));
    const double rhs = hs_norm_sq(heinz_term(a, b, x, nu)) +
                       2.0 * r0 * hs_norm_sq(diff_with(a, b, x));
    return make_case("hs_reverse", lhs, rhs, tol, {{"nu", nu}, {"r0", r0}}, "hs");
}

InequalityCase hs_strong_reverse_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                       double nu, double tol) {
    if (nu < 1.0) throw ParamOutOfRange("hs_strong_reverse needs nu >= 1");
    const double lhs = hs_norm_sq(sum_with(a, b, x)) +
                       2.0 * (nu - 1.0) * hs_norm_sq(diff_with(a, b, x));
    const double rhs = hs_norm_sq(heinz_term(a, b, x, nu));
    return make_case("hs_strong_reverse", lhs, rhs, tol, {{"nu", nu}}, "hs");
}

InequalityCase equality_case_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                   double nu, double tol) {
    if (nu <= 1.0) throw ParamOutOfRange("equality_case needs nu > 1");
    const double ns = std::sqrt(hs_norm_sq(sum_with(a, b, x)));
    const double nh = std::sqrt(hs_norm_sq(heinz_term(a, b, x, nu)));
    const double commute_gap = std::sqrt(hs_norm_sq(diff_with(a, b, x)));
    InequalityCase c;
    c.check_id = "equality_case";
    c.params = {{"nu", nu}, {"commute_gap", commute_gap}};
    c.norm_kind = "hs";
    c.lhs = ns;
    c.rhs = nh;
    c.slack = nh - ns;
    c.scale = std::max({1.0, ns, nh});
    const bool norms_equal = std::abs(c.slack) <= tol * c.scale;
    const bool commuting = commute_gap <= tol * c.scale;
    c.holds = (norms_equal == commuting);
    return c;
}

InequalityCase sv_equality_check(const Hermitian& a, const Hermitian& b, double nu, double tol) {
    if (nu <= 1.0) throw ParamOutOfRange("sv_equality needs nu > 1");
    const Matrix x = Matrix::identity(a.dim());
    const auto s_sum = singular_values(sum_with(a, b, x)).values;
    const auto s_heinz = singular_values(heinz_term(a, b, x, nu)).values;
    double max_gap = 0.0;
    for (std::size_t j = 0; j < s_sum.size(); ++j)
        max_gap = std::max(max_gap, std::abs(s_sum[j] - s_heinz[j]));
    const double ab_gap = (a - b).matrix().frobenius();
    InequalityCase c;
    c.check_id = "sv_equality";
    c.params = {{"nu", nu}, {"ab_gap", ab_gap}};
    c.lhs = s_sum.empty() ? 0.0 : s_sum.front();
    c.rhs = s_heinz.empty() ? 0.0 : s_heinz.front();
    c.slack = max_gap;
    c.scale = std::max({1.0, c.lhs, c.rhs});
    const bool spectra_equal = max_gap <= tol * c.scale;
    const bool equal_matrices = ab_gap <= tol * c.scale;
    c.holds = (spectra_equal == equal_matrices);
    return c;
}

InequalityCase audenaert_sv_check(const Hermitian& a, const Hermitian& b, double nu, double tol) {
    if (nu < 0.0 || nu > 1.0) throw ParamOutOfRange("audenaert needs nu in [0,1]");
    const Matrix x = Matrix::identity(a.dim());
    const auto s_sum = singular_values(sum_with(a, b, x)).values;
    const auto s_heinz = singular_values(heinz_term(a, b, x, nu)).values;
    double worst = std::numeric_limits<double>::infinity();
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t j = 0; j < s_sum.size(); ++j) {
        const double d = s_sum[j] - s_heinz[j];
        if (d < worst) {
            worst = d;
            lhs = s_heinz[j];
            rhs = s_sum[j];
        }
    }
    auto c = make_case("audenaert", lhs, rhs, tol, {{"nu", nu}});
    c.scale = std::max(1.0, s_sum.empty() ? 0.0 : s_sum.front());
    c.holds = c.slack >= -tol * c.scale;
    return c;
}

InequalityCase mcintosh_check(const Matrix& a, const Matrix& b, const Matrix& x,
                              const NormKind& kind, double tol) {
    const double lhs = 2.0 * norm(a * x * b.adjoint(), kind);
    const double rhs = norm(a.adjoint() * a * x + x * b.adjoint() * b, kind);
    return make_case("mcintosh", lhs, rhs, tol, {}, kind.to_string());
}

namespace {
// Inverse of an invertible selfadjoint matrix via its spectrum; eigenvalues
// may be negative, only near-zero ones are refused.
Matrix hermitian_inverse(const Hermitian& a) {
    auto d = hermitian_eig(a);
    const std::size_t n = a.dim();
    double lam_abs_max = 0.0;
    for (double l : d.eigenvalues) lam_abs_max = std::max(lam_abs_max, std::abs(l));
    const double floor = kPdFloorScale * std::max(1.0, lam_abs_max);
    Matrix inv_diag(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(d.eigenvalues[i]) <= floor)
            throw NotPositiveDefinite("selfadjoint matrix is numerically singular");
        inv_diag(i, i) = 1.0 / d.eigenvalues[i];
    }
    return d.unitary * inv_diag * d.unitary.adjoint();
}

Matrix hermitian_int_power(const Hermitian& a, int p) {
    if (p == 0) return Matrix::identity(a.dim());
    auto d = hermitian_eig(a);
    const std::size_t n = a.dim();
    double lam_abs_max = 0.0;
    for (double l : d.eigenvalues) lam_abs_max = std::max(lam_abs_max, std::abs(l));
    const double floor = kPdFloorScale * std::max(1.0, lam_abs_max);
    Matrix pd(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lam = d.eigenvalues[i];
        if (p < 0 && std::abs(lam) <= floor)
            throw NotPositiveDefinite("selfadjoint matrix is numerically singular");
        pd(i, i) = std::pow(lam, p);
    }
    return d.unitary * pd * d.unitary.adjoint();
}
}  // namespace

InequalityCase cpr_check(const Hermitian& a, const Matrix& x, const NormKind& kind, double tol) {
    const Matrix a_inv = hermitian_inverse(a);
    const double lhs = 2.0 * norm(x, kind);
    const double rhs = norm(a.matrix() * x * a_inv + a_inv * x * a.matrix(), kind);
    return make_case("cpr", lhs, rhs, tol, {}, kind.to_string());
}

InequalityCase power_difference_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                      int m, int n, const NormKind& kind, double tol) {
    if (m < 0 || n < 0) throw ParamOutOfRange("power_diff needs nonnegative integers");
    const Matrix lhs_mat = hermitian_int_power(a, 2 * m) * x + x * hermitian_int_power(b, 2 * m);
    const Matrix rhs_mat = hermitian_int_power(a, 2 * m + n) * x * hermitian_int_power(b, -n) +
                           hermitian_int_power(a, -n) * x * hermitian_int_power(b, 2 * m + n);
    const double lhs = norm(lhs_mat, kind);
    const double rhs = norm(rhs_mat, kind);
    return make_case("power_diff", lhs, rhs, tol,
                     {{"m", static_cast<double>(m)}, {"n", static_cast<double>(n)}},
                     kind.to_string());
}

InequalityCase kaur_refinement_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                     double nu, const NormKind& kind, double tol) {
    if (nu < 0.0 || nu > 1.0) throw ParamOutOfRange("kaur needs nu in [0,1]");
    const double r1 = std::min({nu, std::abs(0.5 - nu), 1.0 - nu});
    const Hermitian ah = fractional_power(a, 0.5);
    const Hermitian bh = fractional_power(b, 0.5);
    const Matrix mixed = ah.matrix() * x * bh.matrix();
    const double lhs = norm(heinz_term(a, b, x, nu), kind);
    const double rhs = norm(mixed * cplx{4.0 * r1, 0.0} +
                                sum_with(a, b, x) * cplx{1.0 - 2.0 * r1, 0.0},
                            kind);
    return make_case("kaur", lhs, rhs, tol, {{"nu", nu}, {"r1", r1}}, kind.to_string());
}

InequalityCase aujla_bounds_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                  double s, double t, const NormKind& kind, double tol) {
    if (s < 0.0 || s > 1.0 || t < 0.0 || t > 1.0)
        throw ParamOutOfRange("aujla needs s,t in [0,1]");
    const Hermitian ah = fractional_power(a, 0.5);
    const Hermitian bh = fractional_power(b, 0.5);
    const double low = 2.0 * norm(ah.matrix() * x * bh.matrix(), kind);
    const Matrix mid_mat = fractional_power(a, s).matrix() * x * fractional_power(b, 1.0 - t).matrix() +
                           fractional_power(a, 1.0 - s).matrix() * x * fractional_power(b, t).matrix();
    const double mid = norm(mid_mat, kind);
    const double v1 = norm(sum_with(a, b, x), kind);
    const double v2 = norm(a.matrix() * x * b.matrix() + x, kind);
    const double high = std::max(v1, v2);
    return tightest("aujla", {{low, mid}, {mid, high}}, tol, {{"s", s}, {"t", t}},
                    kind.to_string());
}

InequalityCase operator_heinz_reverse_check(const Hermitian& a, const Hermitian& b, double nu,
                                            double tol) {
    if (nu >= 0.0 && nu <= 1.0)
        throw ParamOutOfRange("op_heinz_reverse needs nu outside [0,1]");
    const Hermitian lhs = arithmetic_mean(a, b);
    const Hermitian rhs = heinz_operator_mean(a, b, 1.0 - nu);
    return loewner_case("op_heinz_reverse", lhs, rhs, tol, {{"nu", nu}});
}

InequalityCase nege_refinement_check(const Hermitian& a, const Hermitian& b, double nu,
                                     double tol) {
    if (nu <= 1.0) throw ParamOutOfRange("nege needs nu > 1");
    const Hermitian avg = arithmetic_mean(a, b);
    const Hermitian geo = geometric_mean_weighted(a, b, 0.5);
    const Hermitian lhs = avg + (avg - geo) * (2.0 * (nu - 1.0));
    const Hermitian rhs = heinz_operator_mean(a, b, 1.0 - nu);
    return loewner_case("nege", lhs, rhs, tol, {{"nu", nu}});
}

InequalityCase tensor_hadamard_reverse_check(const Hermitian& a, const Hermitian& b, double nu,
                                             double tol) {
    if (nu <= 1.0) throw ParamOutOfRange("tensor_hadamard needs nu > 1");
    const Matrix a_nu = fractional_power(a, nu).matrix();
    const Matrix a_mnu = fractional_power(a, -nu).matrix();
    const Matrix b_nu = fractional_power(b, nu).matrix();
    const Matrix b_mnu = fractional_power(b, -nu).matrix();
    const Matrix a_inv = fractional_power(a, -1.0).matrix();
    const Matrix b_inv = fractional_power(b, -1.0).matrix();

    const Hermitian t_lhs = Hermitian::trusted(kronecker(a.matrix(), b_inv) +
                                               kronecker(a_inv, b.matrix()));
    const Hermitian t_rhs = Hermitian::trusted(kronecker(a_nu, b_mnu) + kronecker(a_mnu, b_nu));
    const Hermitian h_lhs = Hermitian::trusted(hadamard(a.matrix(), b_inv) +
                                               hadamard(a_inv, b.matrix()));
    const Hermitian h_rhs = Hermitian::trusted(hadamard(a_nu, b_mnu) + hadamard(a_mnu, b_nu));

    auto c_t = loewner_case("tensor_hadamard", t_lhs, t_rhs, tol, {{"nu", nu}});
    auto c_h = loewner_case("tensor_hadamard", h_lhs, h_rhs, tol, {{"nu", nu}});
    auto worst = (c_t.slack / c_t.scale <= c_h.slack / c_h.scale) ? c_t : c_h;
    worst.holds = c_t.holds && c_h.holds;
    return worst;
}

InequalityCase hadamard_heinz_bounds_check(const Hermitian& a, const Hermitian& b, double s,
                                           double t, const NormKind& kind, double tol) {
    if (s < 0.0 || s > 1.0 || t < 0.0 || t > 1.0)
        throw ParamOutOfRange("hadamard_heinz needs s,t in [0,1]");
    const Matrix ah = fractional_power(a, 0.5).matrix();
    const Matrix bh = fractional_power(b, 0.5).matrix();
    const double low = 2.0 * norm(hadamard(ah, bh), kind);
    const double mid = norm(hadamard_heinz_surface(a, b, s, t).matrix(), kind);
    const Matrix eye = Matrix::identity(a.dim());
    const double v1 = norm(hadamard((a + b).matrix(), eye), kind);
    const double v2 = norm(hadamard(a.matrix(), b.matrix()) + eye, kind);
    const double high = std::max(v1, v2);
    return tightest("hadamard_heinz", {{low, mid}, {mid, high}}, tol, {{"s", s}, {"t", t}},
                    kind.to_string());
}

InequalityCase falsification_check(std::uint64_t seed, std::size_t dim, double nu,
                                   const NormKind& kind, double margin, std::size_t max_trials) {
    InequalityCase c;
    c.check_id = "falsify_heinz";
    c.norm_kind = kind.to_string();
    c.params = {{"nu", nu}, {"margin", margin}};
    for (std::size_t trial = 0; trial < max_trials; ++trial) {
        const std::uint64_t sub = derive_substream(seed, trial);
        Rng rng(sub);
        const Hermitian a = Hermitian::trusted(random_pd(dim, 100.0, rng));
        const Hermitian b = Hermitian::trusted(random_pd(dim, 100.0, rng));
        const Matrix x = random_general(dim, dim, rng);
        const double classical_rhs = norm(a.matrix() * x + x * b.matrix(), kind);
        const double h = norm(heinz_term(a, b, x, nu), kind);
        const double scale = std::max({1.0, classical_rhs, h});
        if (h > classical_rhs + margin * scale) {
            c.lhs = classical_rhs;
            c.rhs = h;
            c.slack = h - classical_rhs;
            c.scale = scale;
            c.params["found_trial"] = static_cast<double>(trial);
            c.holds = true;
            return c;
        }
    }
    c.holds = false;
    c.slack = 0.0;
    return c;
}

}  // namespace matineq
