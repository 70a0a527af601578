#include "crofton/point_geometry.hpp"

#include <cmath>
#include <sstream>

#include "crofton/error.hpp"

namespace crofton {

namespace {

std::string describe(const Vec& p) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p(i);
  out << ")";
  return out.str();
}

double checked_norm(const Vec& phi, const Vec& point) {
  const double n = phi.norm();
  if (n < 1e-14) {
    throw Error("value-condition-violated", "all functions of the space vanish at " + describe(point));
  }
  return n;
}

}  // namespace

Vec theta(const FunctionSpace& space, const Vec& point) {
  const Vec phi = space.values(point);
  return phi / checked_norm(phi, point);
}

Mat pullback_metric(const FunctionSpace& space, const Vec& point, const Mat& frame) {
  Vec phi;
  Mat grad;
  space.evaluate(point, phi, grad);
  const double norm = checked_norm(phi, point);
  const Vec th = phi / norm;
  const Mat jac = grad * frame;
  const Mat dtheta = (jac - th * (th.transpose() * jac)) / norm;
  const Mat g = dtheta.transpose() * dtheta;
  return 0.5 * (g + g.transpose());
}

Mat pullback_metric(const FunctionSpace& space, const Vec& point) {
  return pullback_metric(space, point, space.manifold().tangent_frame(point));
}

ConvexBody f_ellipsoid(const FunctionSpace& space, const Vec& point) {
  return ConvexBody::ellipsoid(pullback_metric(space, point));
}

ConvexBody PointGeometry::ellipsoid(std::size_t i) const { return ConvexBody::ellipsoid(metric.at(i)); }

Vec PointGeometry::semi_axes(std::size_t i) const { return symmetric_eigen(metric.at(i)).values.cwiseSqrt(); }

PointGeometry point_geometry(std::span<const FunctionSpace> spaces, const Vec& point) {
  PointGeometry pg;
  pg.point = point;
  if (spaces.empty()) return pg;
  pg.frame = spaces.front().manifold().tangent_frame(point);
  for (const auto& s : spaces) {
    if (s.manifold().factors() != spaces.front().manifold().factors()) {
      throw Error("dimension-mismatch", "spaces live on different manifolds");
    }
    pg.theta.push_back(theta(s, point));
    pg.metric.push_back(pullback_metric(s, point, pg.frame));
  }
  return pg;
}

double finite_difference_audit(const FunctionSpace& space, const Vec& chart, double h) {
  const Manifold& m = space.manifold();
  Vec values;
  Mat grad;
  space.evaluate(m.embed(chart), values, grad);
  const Mat analytic = grad * m.chart_jacobian(chart);
  const double scale = std::max(1.0, analytic.cwiseAbs().maxCoeff());
  double worst = 0.0;
  for (int a = 0; a < m.dim(); ++a) {
    Vec plus = chart, minus = chart;
    plus(a) += h;
    minus(a) -= h;
    const Vec fd = (space.values(m.embed(plus)) - space.values(m.embed(minus))) / (2.0 * h);
    worst = std::max(worst, (fd - analytic.col(a)).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

}  // namespace crofton
