#pragma once

#include <vector>

#include "ttensor/tensor3.hpp"

namespace ttensor {

struct HermitianEigen {
    /// Ascending.
    Eigen::VectorXd values;
    /// Unitary; column k belongs to values[k].
    ComplexMatrix vectors;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// The input must satisfy ||M - M^H||_F <= 1e-9 (1 + ||M||_F) (NotSymmetric
/// otherwise) and is symmetrized before iterating. Sweeps continue until every
/// off-diagonal magnitude is <= 1e-13 ||M||_F; ConvergenceFailure after 100
/// sweeps. Rotations use a_pq / |a_pq| as phase, so real symmetric input
/// produces real eigenvectors. Ties in the ascending sort keep the original
/// column order.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only (skips accumulation of the rotations).
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

/// All eigenvalues of a general complex matrix, in no particular order.
///
/// Householder reduction to upper Hessenberg form followed by single-shift QR
/// with Wilkinson shifts and deflation at |h_{k,k-1}| <= 1e-13 ||H||_F.
/// ConvergenceFailure after 30*n iterations on one eigenvalue.
std::vector<Complex> general_eig(const ComplexMatrix& m);

/// Reduces m to upper Hessenberg form by Householder similarity transforms.
ComplexMatrix hessenberg(const ComplexMatrix& m);

/// Singular values, descending.
Eigen::VectorXd singular_values(const ComplexMatrix& m);

}  // namespace ttensor
