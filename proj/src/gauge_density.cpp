#include "crofton/gauge_density.hpp"

#include "crofton/error.hpp"

namespace crofton {

GaugeDensity GaugeDensity::of_harmonics(HarmonicGauge gauge) {
  GaugeDensity d;
  d.degree_ = 1;
  d.dim_ = gauge.dim;
  d.harmonics_ = std::move(gauge);
  return d;
}

GaugeDensity GaugeDensity::of_bodies(std::vector<ConvexBody> bodies, VolumeOptions options) {
  if (bodies.empty()) throw Error("dimension-mismatch", "a k-density needs k >= 1 bodies");
  const int n = bodies.front().dim();
  for (const auto& b : bodies) {
    if (b.dim() != n) throw Error("dimension-mismatch", "bodies of a mixed density differ in dimension");
  }
  if (static_cast<int>(bodies.size()) > n) {
    throw Error("dimension-mismatch", "degree exceeds the dimension of V");
  }
  GaugeDensity d;
  d.degree_ = static_cast<int>(bodies.size());
  d.dim_ = n;
  d.bodies_ = std::move(bodies);
  d.options_ = options;
  return d;
}

double GaugeDensity::gauge(const Mat& frame) const {
  if (frame.rows() != dim_ || frame.cols() != degree_) {
    throw Error("dimension-mismatch", "gauge frame must be " + std::to_string(dim_) + " x " + std::to_string(degree_));
  }
  require_orthonormal(frame);
  if (harmonics_) return (*harmonics_)(frame.col(0));
  std::vector<ConvexBody> projected;
  projected.reserve(bodies_.size());
  for (const auto& b : bodies_) projected.push_back(to_body(canonicalize(b).project(frame)));
  return mixed_volume(projected, options_);
}

double GaugeDensity::operator()(const Mat& vectors) const {
  if (vectors.rows() != dim_ || vectors.cols() != degree_) {
    throw Error("dimension-mismatch", "density argument must be " + std::to_string(degree_) + " vectors in R^" +
                                          std::to_string(dim_));
  }
  const double vol = std::sqrt(std::max(0.0, (vectors.transpose() * vectors).determinant()));
  if (vol <= 1e-14 * std::max(1.0, vectors.cwiseAbs().maxCoeff())) return 0.0;
  const Mat frame = vectors.householderQr().householderQ() * Mat::Identity(dim_, degree_);
  return gauge(frame) * vol;
}

GaugeDensity d1(const ConvexBody& body) { return GaugeDensity::of_bodies({body}); }

GaugeDensity dk_mixed(std::vector<ConvexBody> bodies, VolumeOptions options) {
  return GaugeDensity::of_bodies(std::move(bodies), options);
}

}  // namespace crofton
