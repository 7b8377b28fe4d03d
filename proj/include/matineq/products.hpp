#pragma once

#include "matineq/eig.hpp"
#include "matineq/matrix.hpp"

namespace matineq {

Matrix kronecker(const Matrix& a, const Matrix& b);

Matrix hadamard(const Matrix& a, const Matrix& b);

/// The n^2 x n matrix V with V e_j = e_j (x) e_j; satisfies V*V = I exactly.
Matrix diag_isometry(std::size_t n);

/// Hadamard product computed as V*(A (x) B)V; must agree with hadamard().
Matrix hadamard_via_tensor(const Matrix& a, const Matrix& b);

/// A^{1+s} (x) B^{1-t} + A^{1-s} (x) B^{1+t}, (s,t) in [-1,1]^2, A,B PD.
Hermitian tensor_heinz_surface(const Hermitian& a, const Hermitian& b, double s, double t);

/// A^s o B^{1-t} + A^{1-s} o B^t, (s,t) in [0,1]^2, A,B PD.
Hermitian hadamard_heinz_surface(const Hermitian& a, const Hermitian& b, double s, double t);

}  // namespace matineq
