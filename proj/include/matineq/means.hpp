#pragma once

#include "matineq/eig.hpp"
#include "matineq/matrix.hpp"

namespace matineq {

struct ScalarPair {
    double a;
    double b;
};

/// a^nu computed as exp(nu * ln a); a <= 0 is rejected.
double pos_pow(double a, double nu);

/// (a^nu b^{1-nu} + a^{1-nu} b^nu) / 2.
double scalar_heinz(const ScalarPair& p, double nu);

/// a^nu b^{1-nu} - (nu a + (1-nu) b); nonnegative for nu outside [0,1].
double young_reverse_gap(const ScalarPair& p, double nu);

/// a^nu b^{1-nu} + b^nu a^{1-nu} - (a + b); nonnegative for nu outside [0,1].
double lemma21_gap(const ScalarPair& p, double nu);

/// The three gap quantities that are nonnegative for nu outside [1/2, 1]:
/// g1 = a^nu b^{1-nu} - [nu a + (1-nu) b + (nu-1)(sqrt a - sqrt b)^2]
/// g2 = a^nu b^{1-nu} + b^nu a^{1-nu} - [(a+b) + 2(nu-1)(sqrt a - sqrt b)^2]
/// g3 = (a^nu b^{1-nu} + b^nu a^{1-nu})^2 - [(a+b)^2 + 2(nu-1)(a-b)^2]
struct GapTriple {
    double g1, g2, g3;
};
GapTriple lemma23_gaps(const ScalarPair& p, double nu);

Hermitian arithmetic_mean(const Hermitian& a, const Hermitian& b);

/// A^{1/2} (A^{-1/2} B A^{-1/2})^mu A^{1/2}, any real mu, PD inputs.
Hermitian geometric_mean_weighted(const Hermitian& a, const Hermitian& b, double mu,
                                  double nu_max = kDefaultNuMax);

/// (A #_nu B + A #_{1-nu} B) / 2; symmetric under nu -> 1-nu.
Hermitian heinz_operator_mean(const Hermitian& a, const Hermitian& b, double nu,
                              double nu_max = kDefaultNuMax);

}  // namespace matineq
