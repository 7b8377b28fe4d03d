#include "matineq/products.hpp"

#include <cmath>

namespace matineq {

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * b(i, j);
    return r;
}

Matrix diag_isometry(std::size_t n) {
    Matrix v(n * n, n);
    for (std::size_t j = 0; j < n; ++j) v(j * n + j, j) = 1.0;
    return v;
}

Matrix hadamard_via_tensor(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    if (!a.square()) throw DimensionMismatch("hadamard_via_tensor needs square inputs");
    const Matrix v = diag_isometry(a.rows());
    return v.adjoint() * kronecker(a, b) * v;
}

Hermitian tensor_heinz_surface(const Hermitian& a, const Hermitian& b, double s, double t) {
    if (std::abs(s) > 1.0 || std::abs(t) > 1.0)
        throw ParamOutOfRange("surface parameters outside [-1,1]^2");
    const Hermitian ap = fractional_power(a, 1.0 + s);
    const Hermitian am = fractional_power(a, 1.0 - s);
    const Hermitian bp = fractional_power(b, 1.0 + t);
    const Hermitian bm = fractional_power(b, 1.0 - t);
    return Hermitian::trusted(kronecker(ap.matrix(), bm.matrix()) +
                              kronecker(am.matrix(), bp.matrix()));
}

Hermitian hadamard_heinz_surface(const Hermitian& a, const Hermitian& b, double s, double t) {
    if (s < 0.0 || s > 1.0 || t < 0.0 || t > 1.0)
        throw ParamOutOfRange("surface parameters outside [0,1]^2");
    const Hermitian as = fractional_power(a, s);
    const Hermitian a1s = fractional_power(a, 1.0 - s);
    const Hermitian bt = fractional_power(b, t);
    const Hermitian b1t = fractional_power(b, 1.0 - t);
    return Hermitian::trusted(hadamard(as.matrix(), b1t.matrix()) +
                              hadamard(a1s.matrix(), bt.matrix()));
}

}  // namespace matineq
