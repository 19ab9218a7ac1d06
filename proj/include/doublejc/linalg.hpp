#pragma once

#include <Eigen/Dense>

#include "doublejc/model.hpp"

namespace doublejc {

using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using CMatrix3 = Eigen::Matrix<cplx, 3, 3>;
using CMatrix4 = Eigen::Matrix<cplx, 4, 4>;
using RVector = Eigen::VectorXd;

struct HermitianEigen {
  RVector values;   // ascending
  CMatrix vectors;  // columns are eigenvectors, unitary
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot element, then applies a
/// real Givens rotation. Sweeps continue until the off-diagonal Frobenius norm
/// falls below 1e-15 of the total norm (or 64 sweeps, which a well-posed input
/// never reaches). Only the lower triangle symmetry is assumed, not checked.
HermitianEigen jacobi_eigen(const CMatrix& hermitian);

/// f(H) = V diag(f(lambda)) V^dagger for a Hermitian H.
template <typename Fn>
CMatrix hermitian_function(const HermitianEigen& eig, Fn&& fn) {
  const auto n = eig.values.size();
  CMatrix diag = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) diag(i, i) = fn(eig.values(i));
  return eig.vectors * diag * eig.vectors.adjoint();
}

}  // namespace doublejc
