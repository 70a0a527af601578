#pragma once

#include <string>
#include <vector>

#include "crofton/linalg.hpp"

namespace crofton {

/// Product of unit circles and round unit 2-spheres, embedded in R^N as the
/// product of the standard embeddings (blocks of 2 or 3 coordinates).
/// Chart coordinates: one angle per circle, (polar, azimuth) per sphere.
class Manifold {
 public:
  static Manifold circle();
  static Manifold torus(int n);
  static Manifold sphere2();
  /// Factor dimensions in {1, 2}: 1 = circle, 2 = sphere.
  static Manifold product(std::vector<int> factor_dims);

  /// "circle", "s1", "torus<n>", "t<n>", "s2", or factors joined by 'x'
  /// ("s2xs1").
  static Manifold parse(const std::string& name);
  static std::string supported_names();

  int dim() const { return dim_; }
  int ambient_dim() const { return ambient_dim_; }
  const std::vector<int>& factors() const { return factors_; }
  int factor_count() const { return static_cast<int>(factors_.size()); }
  /// First ambient coordinate of factor j.
  int ambient_offset(int j) const { return ambient_offsets_[j]; }
  /// First chart coordinate of factor j.
  int chart_offset(int j) const { return chart_offsets_[j]; }
  bool is_torus() const;
  std::string name() const;

  Vec embed(const Vec& chart) const;
  /// d(embed)/d(chart), ambient_dim x dim.
  Mat chart_jacobian(const Vec& chart) const;
  Vec chart_of(const Vec& point) const;

  /// Orthonormal tangent basis at a point of the manifold, ambient_dim x dim.
  Mat tangent_frame(const Vec& point) const;

  /// Nearest point of the manifold (blockwise normalization).
  Vec retract(const Vec& ambient) const;

  /// Riemannian volume in closed form.
  double volume() const;

  struct Quadrature {
    std::vector<Vec> points;
    std::vector<double> weights;
  };

  /// Tensor rule: periodic trapezoid with `resolution` nodes per circle;
  /// Gauss-Legendre in z (`resolution` nodes) times trapezoid in azimuth
  /// (2 * resolution nodes) per sphere. 0 selects the default size.
  Quadrature quadrature(int resolution = 0) const;
  int default_resolution(int factor_dim) const;

 private:
  std::vector<int> factors_;
  std::vector<int> ambient_offsets_;
  std::vector<int> chart_offsets_;
  int dim_ = 0;
  int ambient_dim_ = 0;
};

}  // namespace crofton
