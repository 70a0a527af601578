#pragma once

#include <vector>

#include "crofton/linalg.hpp"

namespace crofton {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Gauss-Legendre rule mapped to [a, b].
GaussLegendre gauss_legendre(int n, double a, double b);

/// Quadrature on the unit sphere S^{d-1} in R^d; weights sum to the sphere's
/// surface measure.
struct SphereRule {
  std::vector<Vec> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// d = 1: the two points +-1. d = 2: periodic trapezoid with `resolution`
/// nodes. d = 3: Gauss-Legendre in z (`resolution` nodes) times trapezoid in
/// the azimuth (2 * resolution nodes). d = 4: Gauss-Legendre in the first
/// polar angle times the d = 3 rule.
SphereRule sphere_rule(int d, int resolution);

/// Rule on S^2 that is Gauss-Legendre in the polar angle measured from `pole`
/// (not in its cosine). Integrands with a |sin| factor about `pole` stay
/// smooth in this variable.
SphereRule polar_angle_rule(int resolution, const Vec& pole);

}  // namespace crofton
