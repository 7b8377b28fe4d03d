#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matineq/eig.hpp"
#include "matineq/matrix.hpp"
#include "matineq/means.hpp"
#include "matineq/norms.hpp"
#include "matineq/products.hpp"

namespace matineq {

/// One evaluated instance of one inequality. Slack is oriented as
/// rhs - lhs with the claimed direction, so holds == (slack >= -tol*scale).
struct InequalityCase {
    std::string check_id;
    std::map<std::string, double> params;
    std::string norm_kind;  // empty when the check is not norm-parametrized
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double scale = 1.0;
    bool holds = false;
};

struct Witness {
    std::optional<Matrix> A, B, X;
    std::uint64_t seed = 0;
};

// --- norm inequality checks ---

/// 2|||A^{1/2}XB^{1/2}||| <= |||A^nu X B^{1-nu} + A^{1-nu} X B^nu||| <= |||AX+XB|||,
/// nu in [0,1]. Reports the tighter of the two sides.
InequalityCase heinz_double_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                  double nu, const NormKind& kind, double tol);

/// |||AX+XB||| <= |||A^nu X B^{1-nu} + A^{1-nu} X B^nu|||, nu outside [0,1].
InequalityCase heinz_reverse_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                   double nu, const NormKind& kind, double tol);

/// ||H-term||_2^2 + 2 r0 ||AX-XB||_2^2 <= ||AX+XB||_2^2, r0 = min{nu, 1-nu}.
InequalityCase hs_refinement_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                   double nu, double tol);

/// ||AX+XB||_2^2 <= ||H-term||_2^2 + 2 r0 ||AX-XB||_2^2, r0 = max{nu, 1-nu}.
InequalityCase hs_reverse_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                double nu, double tol);

/// ||AX+XB||_2^2 + 2(nu-1)||AX-XB||_2^2 <= ||H-term||_2^2, nu > 1.
InequalityCase hs_strong_reverse_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                       double nu, double tol);

/// Equality ||AX+XB||_2 == ||H-term||_2 holds iff AX == XB (nu > 1).
/// slack = |norm gap|; params carry the commutator gap.
InequalityCase equality_case_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                   double nu, double tol);

/// s_j(A+B) == s_j(A^nu B^{1-nu} + A^{1-nu} B^nu) for all j iff A == B (nu > 1).
InequalityCase sv_equality_check(const Hermitian& a, const Hermitian& b, double nu, double tol);

/// s_j(A^nu B^{1-nu} + A^{1-nu} B^nu) <= s_j(A+B) for every j, nu in [0,1].
InequalityCase audenaert_sv_check(const Hermitian& a, const Hermitian& b, double nu, double tol);

/// ||A*AX + XB*B|| >= 2||AXB*||, arbitrary A, B, X.
InequalityCase mcintosh_check(const Matrix& a, const Matrix& b, const Matrix& x,
                              const NormKind& kind, double tol);

/// ||AXA^{-1} + A^{-1}XA|| >= 2||X||, A selfadjoint invertible.
InequalityCase cpr_check(const Hermitian& a, const Matrix& x, const NormKind& kind, double tol);

/// ||A^{2m+n} X B^{-n} + A^{-n} X B^{2m+n}|| >= ||A^{2m} X + X B^{2m}||.
InequalityCase power_difference_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                      int m, int n, const NormKind& kind, double tol);

/// |||H-term||| <= |||4 r1 A^{1/2}XB^{1/2} + (1-2 r1)(AX+XB)|||,
/// r1 = min{nu, |1/2-nu|, 1-nu}, nu in [0,1].
InequalityCase kaur_refinement_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                     double nu, const NormKind& kind, double tol);

/// 2|||A^{1/2}XB^{1/2}||| <= |||A^s X B^{1-t} + A^{1-s} X B^t|||
///   <= max{|||AX+XB|||, |||AXB+X|||}, s,t in [0,1].
InequalityCase aujla_bounds_check(const Hermitian& a, const Hermitian& b, const Matrix& x,
                                  double s, double t, const NormKind& kind, double tol);

// --- Loewner-order checks (slack = min eigenvalue of RHS - LHS) ---

/// A nabla B <= H_{1-nu}(A,B), nu outside [0,1].
InequalityCase operator_heinz_reverse_check(const Hermitian& a, const Hermitian& b, double nu,
                                            double tol);

/// A nabla B + 2(nu-1)(A nabla B - A #_{1/2} B) <= H_{1-nu}(A,B), nu > 1.
InequalityCase nege_refinement_check(const Hermitian& a, const Hermitian& b, double nu,
                                     double tol);

/// A (x) B^{-1} + A^{-1} (x) B <= A^nu (x) B^{-nu} + A^{-nu} (x) B^nu, and the
/// same with the Hadamard product, nu > 1. Reports the tighter variant.
InequalityCase tensor_hadamard_reverse_check(const Hermitian& a, const Hermitian& b, double nu,
                                             double tol);

/// 2|||A^{1/2} o B^{1/2}||| <= |||A^s o B^{1-t} + A^{1-s} o B^t|||
///   <= max{|||(A+B) o I|||, |||(A o B) + I|||}, s,t in [0,1].
InequalityCase hadamard_heinz_bounds_check(const Hermitian& a, const Hermitian& b, double s,
                                           double t, const NormKind& kind, double tol);

/// Searches seeded random witnesses for a violation of the classical Heinz
/// upper bound at nu outside [0,1]; holds means a violating witness with the
/// requested margin was found. params carry the winning trial index.
InequalityCase falsification_check(std::uint64_t seed, std::size_t dim, double nu,
                                   const NormKind& kind, double margin, std::size_t max_trials);

/// A^nu X B^{1-nu} + A^{1-nu} X B^nu.
Matrix heinz_term(const Hermitian& a, const Hermitian& b, const Matrix& x, double nu);

}  // namespace matineq
