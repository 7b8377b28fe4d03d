#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace matineq {

using cplx = std::complex<double>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPositiveDefinite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ExponentOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonPositiveScalar : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParamOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct KOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense rectangular complex matrix, row-major storage.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match rows*cols");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix diag(const std::vector<double>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    Matrix adjoint() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matmul shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx aik = (*this)(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }
    Matrix operator*(cplx s) const {
        Matrix r = *this;
        for (auto& v : r.data_) v *= s;
        return r;
    }
    friend Matrix operator*(cplx s, const Matrix& m) { return m * s; }

    double frobenius() const;
    double max_abs() const;
    bool all_finite() const;

    /// max_ij |a_ij - conj(a_ji)|, relative to max(1, max|entry|).
    double hermitian_defect() const;

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shapes differ");
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

/// Square matrix validated Hermitian on construction; stores (H + H*)/2.
class Hermitian {
  public:
    static constexpr double kHermitianTol = 1e-10;

    explicit Hermitian(const Matrix& m, double tol = kHermitianTol);

    /// Wraps without the symmetry check; still symmetrizes.
    static Hermitian trusted(const Matrix& m);

    std::size_t dim() const { return mat_.rows(); }
    const Matrix& matrix() const { return mat_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

    Hermitian operator+(const Hermitian& o) const { return trusted(mat_ + o.mat_); }
    Hermitian operator-(const Hermitian& o) const { return trusted(mat_ - o.mat_); }
    Hermitian operator*(double s) const { return trusted(mat_ * cplx{s, 0.0}); }

    static Hermitian identity(std::size_t n) { return trusted(Matrix::identity(n)); }
    static Hermitian diag(const std::vector<double>& d) { return trusted(Matrix::diag(d)); }

  private:
    Hermitian() = default;
    Matrix mat_;
};

}  // namespace matineq
