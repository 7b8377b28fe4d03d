#include "matineq/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace matineq {

double Matrix::frobenius() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool Matrix::all_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double Matrix::hermitian_defect() const {
    if (!square()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d / std::max(1.0, max_abs());
}

Hermitian::Hermitian(const Matrix& m, double tol) {
    if (!m.square()) throw NonHermitian("matrix is not square");
    if (m.hermitian_defect() > tol) throw NonHermitian("symmetry check failed");
    *this = trusted(m);
}

Hermitian Hermitian::trusted(const Matrix& m) {
    Hermitian h;
    h.mat_ = (m + m.adjoint()) * cplx{0.5, 0.0};
    return h;
}

}  // namespace matineq
