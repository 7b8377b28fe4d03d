#pragma once

#include "matineq/matrix.hpp"

namespace matineq {

/// Eigenvalues ascending with a unitary whose columns are eigenvectors.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Matrix unitary;

    Matrix reconstruct() const;
};

struct EigOptions {
    int max_sweeps = 60;
    double off_tol = 1e-13;  // relative to ||H||_F
};

/// Cyclic Jacobi eigendecomposition with complex rotations.
/// Eigenvector column phases are fixed so the largest-modulus component
/// is real positive.
SpectralDecomposition hermitian_eig(const Hermitian& h, const EigOptions& opts = {});

struct SingularValueList {
    std::vector<double> values;  // descending, >= 0
};

SingularValueList singular_values(const Matrix& a);

inline constexpr double kPdFloorScale = 1e-10;
inline constexpr double kDefaultNuMax = 4.0;

/// Spectral fractional power U diag(lambda^nu) U*.
/// Integer nu works for any Hermitian spectrum (negative integers need the
/// spectrum bounded away from 0); non-integer nu >= 0 needs PSD, non-integer
/// nu < 0 needs PD.
Hermitian fractional_power(const Hermitian& a, double nu, double nu_max = kDefaultNuMax);

bool is_psd(const Hermitian& h, double tol);

/// Smallest eigenvalue; the scalar slack for Loewner-order claims.
double min_eigenvalue(const Hermitian& h);

/// Largest singular value.
double operator_norm(const Matrix& a);

/// A <= B in the Loewner order, i.e. B - A is PSD within tol.
bool loewner_leq(const Hermitian& a, const Hermitian& b, double tol);

/// [[A, X], [X*, B]] of size (n+m) x (n+m).
Hermitian block_2x2(const Hermitian& a, const Matrix& x, const Hermitian& b);

/// Both sides of the block-PSD criterion: the block matrix is PSD iff
/// X B^{-1} X* <= A (for PD B). Returned separately so the equivalence
/// itself is testable.
struct BlockPsdVerdict {
    bool block_psd;
    bool schur_leq;
};
BlockPsdVerdict block_psd_equivalence_check(const Hermitian& a, const Matrix& x,
                                            const Hermitian& b, double tol);

}  // namespace matineq
