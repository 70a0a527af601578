#include "crofton/linalg.hpp"

#include <cmath>
#include <limits>

#include "crofton/error.hpp"

namespace crofton {

Mat orthogonal_complement(const Mat& basis) {
  const auto n = basis.rows();
  if (basis.cols() == 0) return Mat::Identity(n, n);
  Eigen::JacobiSVD<Mat> svd(basis, Eigen::ComputeFullU);
  const Vec& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > 1e-12 * std::max(smax, 1e-300)) ++rank;
  }
  return svd.matrixU().rightCols(n - rank);
}

Mat orthogonal_complement(const Vec& direction) {
  return orthogonal_complement(Mat(direction));
}

void require_orthonormal(const Mat& frame, double tol) {
  const Mat gram = frame.transpose() * frame;
  const double dev = (gram - Mat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (!(dev <= tol)) {
    throw Error("bad-frame", "frame columns are not orthonormal (Gram deviation " +
                                 std::to_string(dev) + ")");
  }
}

SymmetricEigen symmetric_eigen(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (a + a.transpose()));
  return {es.eigenvalues().cwiseMax(0.0), es.eigenvectors()};
}

double condition_number(const Mat& a) {
  if (a.size() == 0) return 1.0;
  Eigen::JacobiSVD<Mat> svd(a);
  const Vec& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

Mat orthogonal_from_gaussian(const Mat& gaussian) {
  Eigen::HouseholderQR<Mat> qr(gaussian);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    if (r(i, i) < 0) q.col(i) *= -1.0;
  }
  return q;
}

}  // namespace crofton
