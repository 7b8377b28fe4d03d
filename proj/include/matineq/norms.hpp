#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matineq/matrix.hpp"

namespace matineq {

/// Tagged choice of unitarily invariant norm.
struct NormKind {
    enum class Tag { HilbertSchmidt, Schatten, KyFan, Operator };
    Tag tag = Tag::HilbertSchmidt;
    double p = 2.0;      // Schatten only
    std::size_t k = 1;   // KyFan only

    static NormKind hilbert_schmidt() { return {Tag::HilbertSchmidt, 2.0, 1}; }
    static NormKind schatten(double p) { return {Tag::Schatten, p, 1}; }
    static NormKind ky_fan(std::size_t k) { return {Tag::KyFan, 2.0, k}; }
    static NormKind op() { return {Tag::Operator, 2.0, 1}; }

    /// "hs", "schatten:p", "kyfan:k", "op".
    std::string to_string() const;
    static std::optional<NormKind> parse(const std::string& s);
};

double norm(const Matrix& a, const NormKind& kind);

/// Entrywise sum of |a_ij|^2, no SVD involved.
double hs_norm_sq(const Matrix& a);

/// Ky Fan dominance for every k; certifies |||A||| <= |||B||| for all
/// unitarily invariant norms.
bool fan_dominance_leq(const Matrix& a, const Matrix& b, double tol);

/// The finite test family standing in for "all unitarily invariant norms":
/// Ky Fan k=1..n, Schatten p in {1, 1.5, 2, 3}, operator norm.
std::vector<NormKind> norm_test_family(std::size_t n);

}  // namespace matineq
