#pragma once

#include <optional>
#include <vector>

#include "crofton/convex_body.hpp"
#include "crofton/cosine_transform.hpp"
#include "crofton/volume.hpp"

namespace crofton {

/// Translation-invariant k-density on V = R^n: the density of a k-vector
/// xi_1 ^ ... ^ xi_k is gauge(H) * vol_k(xi_1, ..., xi_k), H its span.
/// The gauge is either the mixed k-volume of projections of k bodies onto H
/// or, for k = 1, a harmonic expansion on Gr(1, V).
class GaugeDensity {
 public:
  static GaugeDensity of_harmonics(HarmonicGauge gauge);
  static GaugeDensity of_bodies(std::vector<ConvexBody> bodies, VolumeOptions options = {});

  int degree() const { return degree_; }
  int dim() const { return dim_; }

  /// Gauge at the span of the orthonormal columns of `frame` (n x k).
  double gauge(const Mat& frame) const;

  /// Density of the parallelotope spanned by the columns of `vectors`.
  double operator()(const Mat& vectors) const;

  const std::vector<ConvexBody>& bodies() const { return bodies_; }
  const std::optional<HarmonicGauge>& harmonics() const { return harmonics_; }

 private:
  GaugeDensity() = default;

  int degree_ = 1;
  int dim_ = 0;
  std::vector<ConvexBody> bodies_;
  std::optional<HarmonicGauge> harmonics_;
  VolumeOptions options_;
};

/// Width density: gauge(H) = V_1(projection onto the line H).
GaugeDensity d1(const ConvexBody& body);

/// gauge(H) = V_k(pi_H A_1, ..., pi_H A_k).
GaugeDensity dk_mixed(std::vector<ConvexBody> bodies, VolumeOptions options = {});

}  // namespace crofton
