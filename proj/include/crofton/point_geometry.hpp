#pragma once

#include <span>
#include <vector>

#include "crofton/convex_body.hpp"
#include "crofton/function_space.hpp"

namespace crofton {

/// Evaluation functional phi(x) = (f_1(x), ..., f_m(x)) normalized. Throws
/// "value-condition-violated" when |phi(x)| < 1e-14.
Vec theta(const FunctionSpace& space, const Vec& point);

/// Pull-back of the round metric of the unit sphere under theta, in the
/// orthonormal tangent frame (ambient_dim x n).
Mat pullback_metric(const FunctionSpace& space, const Vec& point, const Mat& frame);
Mat pullback_metric(const FunctionSpace& space, const Vec& point);

/// Ellipsoid with support sqrt(xi^T G xi) in frame coordinates.
ConvexBody f_ellipsoid(const FunctionSpace& space, const Vec& point);

struct PointGeometry {
  Vec point;
  Mat frame;
  std::vector<Vec> theta;
  std::vector<Mat> metric;

  ConvexBody ellipsoid(std::size_t i) const;
  Vec semi_axes(std::size_t i) const;
};

PointGeometry point_geometry(std::span<const FunctionSpace> spaces, const Vec& point);

/// Max deviation, relative to the gradient scale, between analytic chart
/// derivatives of the basis and central differences with step h.
double finite_difference_audit(const FunctionSpace& space, const Vec& chart, double h);

}  // namespace crofton
