#pragma once

#include <Eigen/Dense>

namespace crofton {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Orthonormal basis (as columns) of the orthogonal complement of the column
/// span of `basis`. Columns of `basis` need not be orthonormal; rank is
/// detected with a relative tolerance.
Mat orthogonal_complement(const Mat& basis);

/// Orthonormal basis of the complement of a single direction.
Mat orthogonal_complement(const Vec& direction);

/// Throws Error("bad-frame") unless the columns of `frame` are orthonormal
/// to within `tol` (max abs deviation of the Gram matrix from identity).
void require_orthonormal(const Mat& frame, double tol = 1e-8);

/// Symmetric eigen-decomposition with eigenvalues clamped at zero.
struct SymmetricEigen {
  Vec values;  // ascending
  Mat vectors;
};
SymmetricEigen symmetric_eigen(const Mat& a);

/// Ratio of largest to smallest singular value; +inf for singular input.
double condition_number(const Mat& a);

/// Uniformly random orthogonal matrix from a caller-supplied Gaussian matrix
/// (QR with sign fix).
Mat orthogonal_from_gaussian(const Mat& gaussian);

}  // namespace crofton
