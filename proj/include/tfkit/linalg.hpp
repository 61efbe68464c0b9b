#pragma once

#include <Eigen/Dense>

#include "tfkit/kernel.hpp"
#include "tfkit/signal.hpp"

namespace tfkit {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Matrix M with (T s) = M s on coefficient vectors: M(y, x) = w1 K(x, y).
Matrix operator_matrix(const KernelOperator& T);
KernelOperator operator_from_matrix(const Matrix& M, const GroupSpec& domain, const GroupSpec& codomain);

Vector to_vector(const Signal& s);
Signal to_signal(const Vector& v, const GroupSpec& g);

/// Eigenvalues of the Hermitian part of a square operator matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& M);

/// Largest singular value of M.
double spectral_norm(const Matrix& M);

}  // namespace tfkit
