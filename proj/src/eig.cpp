#include "matineq/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace matineq {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

bool is_integer(double x) { return x == std::floor(x); }

}  // namespace

Matrix SpectralDecomposition::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    Matrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = eigenvalues[i];
    return unitary * lam * unitary.adjoint();
}

SpectralDecomposition hermitian_eig(const Hermitian& h, const EigOptions& opts) {
    const std::size_t n = h.dim();
    Matrix a = h.matrix();
    Matrix v = Matrix::identity(n);
    const double scale = a.frobenius();
    const double thresh = opts.off_tol * std::max(scale, 1e-300);

    int sweep = 0;
    while (off_diagonal_norm(a) > thresh) {
        if (++sweep > opts.max_sweeps)
            throw NoConvergence("jacobi sweep limit exceeded");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r <= 1e-2 * thresh / static_cast<double>(n)) continue;
                const cplx w = apq / r;  // phase of the pivot
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx wc = std::conj(w);

                // Right-multiply columns p,q of A and V by the rotation.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * wc * aiq;
                    a(i, q) = s * aip + c * wc * aiq;
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * wc * viq;
                    v(i, q) = s * vip + c * wc * viq;
                }
                // Left-multiply rows p,q by the conjugate transpose.
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * w * aqj;
                    a(q, j) = s * apj + c * w * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.unitary = Matrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        d.eigenvalues[col] = a(src, src).real();
        // Phase fix: largest-modulus component real positive.
        std::size_t imax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double m = std::abs(v(i, src));
            if (m > best) { best = m; imax = i; }
        }
        cplx phase{1.0, 0.0};
        if (best > 0.0) phase = std::conj(v(imax, src)) / best;
        for (std::size_t i = 0; i < n; ++i) d.unitary(i, col) = v(i, src) * phase;
    }
    return d;
}

SingularValueList singular_values(const Matrix& a) {
    // Work with the smaller Gram matrix.
    const bool tall = a.rows() >= a.cols();
    const Matrix g = tall ? a.adjoint() * a : a * a.adjoint();
    auto d = hermitian_eig(Hermitian::trusted(g));
    SingularValueList out;
    out.values.reserve(d.eigenvalues.size());
    for (auto it = d.eigenvalues.rbegin(); it != d.eigenvalues.rend(); ++it)
        out.values.push_back(std::sqrt(std::max(*it, 0.0)));
    return out;
}

Hermitian fractional_power(const Hermitian& a, double nu, double nu_max) {
    if (std::abs(nu) > nu_max) throw ExponentOutOfRange("exponent exceeds configured range");
    auto d = hermitian_eig(a);
    const std::size_t n = a.dim();
    const double lam_max = d.eigenvalues.empty() ? 0.0 : std::abs(d.eigenvalues.back());
    const double floor = kPdFloorScale * std::max(1.0, lam_max);

    std::vector<double> powered(n);
    const bool integral = is_integer(nu);
    for (std::size_t i = 0; i < n; ++i) {
        double lam = d.eigenvalues[i];
        if (integral) {
            if (nu < 0.0 && std::abs(lam) <= floor)
                throw NotPositiveDefinite("spectrum touches zero; negative power undefined");
            powered[i] = (nu == 0.0) ? 1.0 : std::pow(lam, nu);
        } else if (nu >= 0.0) {
            if (lam <= -floor) throw NotPositiveDefinite("negative eigenvalue under fractional power");
            powered[i] = (lam <= 0.0) ? 0.0 : std::pow(lam, nu);
        } else {
            if (lam <= floor) throw NotPositiveDefinite("eigenvalue at or below pd floor");
            powered[i] = std::pow(lam, nu);
        }
    }
    Matrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = powered[i];
    return Hermitian::trusted(d.unitary * lam * d.unitary.adjoint());
}

double min_eigenvalue(const Hermitian& h) {
    auto d = hermitian_eig(h);
    return d.eigenvalues.empty() ? 0.0 : d.eigenvalues.front();
}

double operator_norm(const Matrix& a) {
    auto sv = singular_values(a);
    return sv.values.empty() ? 0.0 : sv.values.front();
}

bool is_psd(const Hermitian& h, double tol) {
    auto d = hermitian_eig(h);
    if (d.eigenvalues.empty()) return true;
    const double lam_min = d.eigenvalues.front();
    const double lam_abs = std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
    return lam_min >= -tol * std::max(1.0, lam_abs);
}

bool loewner_leq(const Hermitian& a, const Hermitian& b, double tol) {
    if (a.dim() != b.dim()) throw DimensionMismatch("loewner_leq dimension mismatch");
    return is_psd(b - a, tol);
}

Hermitian block_2x2(const Hermitian& a, const Matrix& x, const Hermitian& b) {
    const std::size_t n = a.dim(), m = b.dim();
    if (x.rows() != n || x.cols() != m) throw DimensionMismatch("block corner shape mismatch");
    Matrix blk(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) blk(i, j) = a(i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            blk(i, n + j) = x(i, j);
            blk(n + j, i) = std::conj(x(i, j));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) blk(n + i, n + j) = b(i, j);
    return Hermitian::trusted(blk);
}

BlockPsdVerdict block_psd_equivalence_check(const Hermitian& a, const Matrix& x,
                                            const Hermitian& b, double tol) {
    const Hermitian b_inv = fractional_power(b, -1.0);
    const Hermitian schur = Hermitian::trusted(x * b_inv.matrix() * x.adjoint());
    BlockPsdVerdict v;
    v.block_psd = is_psd(block_2x2(a, x, b), tol);
    v.schur_leq = loewner_leq(schur, a, tol);
    return v;
}

}  // namespace matineq
