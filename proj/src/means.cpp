#include "matineq/means.hpp"

#include <cmath>

namespace matineq {

double pos_pow(double a, double nu) {
    if (!(a > 0.0)) throw NonPositiveScalar("base must be positive");
    if (nu == 0.0) return 1.0;
    if (nu == 1.0) return a;
    return std::exp(nu * std::log(a));
}

double scalar_heinz(const ScalarPair& p, double nu) {
    return 0.5 * (pos_pow(p.a, nu) * pos_pow(p.b, 1.0 - nu) +
                  pos_pow(p.a, 1.0 - nu) * pos_pow(p.b, nu));
}

double young_reverse_gap(const ScalarPair& p, double nu) {
    return pos_pow(p.a, nu) * pos_pow(p.b, 1.0 - nu) - (nu * p.a + (1.0 - nu) * p.b);
}

double lemma21_gap(const ScalarPair& p, double nu) {
    return pos_pow(p.a, nu) * pos_pow(p.b, 1.0 - nu) +
           pos_pow(p.b, nu) * pos_pow(p.a, 1.0 - nu) - (p.a + p.b);
}

GapTriple lemma23_gaps(const ScalarPair& p, double nu) {
    const double a = p.a, b = p.b;
    const double ab_nu = pos_pow(a, nu) * pos_pow(b, 1.0 - nu);
    const double ba_nu = pos_pow(b, nu) * pos_pow(a, 1.0 - nu);
    const double root_gap = std::sqrt(a) - std::sqrt(b);
    GapTriple g;
    g.g1 = ab_nu - (nu * a + (1.0 - nu) * b + (nu - 1.0) * root_gap * root_gap);
    g.g2 = ab_nu + ba_nu - ((a + b) + 2.0 * (nu - 1.0) * root_gap * root_gap);
    const double sum_pow = ab_nu + ba_nu;
    g.g3 = sum_pow * sum_pow - ((a + b) * (a + b) + 2.0 * (nu - 1.0) * (a - b) * (a - b));
    return g;
}

Hermitian arithmetic_mean(const Hermitian& a, const Hermitian& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("arithmetic_mean dimension mismatch");
    return (a + b) * 0.5;
}

Hermitian geometric_mean_weighted(const Hermitian& a, const Hermitian& b, double mu,
                                  double nu_max) {
    if (a.dim() != b.dim()) throw DimensionMismatch("geometric mean dimension mismatch");
    const Hermitian a_half = fractional_power(a, 0.5, nu_max);
    const Hermitian a_neg_half = fractional_power(a, -0.5, nu_max);
    const Hermitian inner =
        Hermitian::trusted(a_neg_half.matrix() * b.matrix() * a_neg_half.matrix());
    const Hermitian inner_pow = fractional_power(inner, mu, nu_max);
    return Hermitian::trusted(a_half.matrix() * inner_pow.matrix() * a_half.matrix());
}

Hermitian heinz_operator_mean(const Hermitian& a, const Hermitian& b, double nu,
                              double nu_max) {
    if (std::abs(nu) > nu_max || std::abs(1.0 - nu) > nu_max)
        throw ExponentOutOfRange("heinz exponent exceeds configured range");
    // Share A^{+-1/2} between the two geometric means.
    const Hermitian a_half = fractional_power(a, 0.5, nu_max);
    const Hermitian a_neg_half = fractional_power(a, -0.5, nu_max);
    const Hermitian inner =
        Hermitian::trusted(a_neg_half.matrix() * b.matrix() * a_neg_half.matrix());
    const Hermitian p1 = fractional_power(inner, nu, nu_max);
    const Hermitian p2 = fractional_power(inner, 1.0 - nu, nu_max);
    const Matrix mid = (p1.matrix() + p2.matrix()) * cplx{0.5, 0.0};
    return Hermitian::trusted(a_half.matrix() * mid * a_half.matrix());
}

}  // namespace matineq
