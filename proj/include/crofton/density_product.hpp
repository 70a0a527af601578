#pragma once

#include <span>

#include "crofton/identity.hpp"
#include "crofton/normal_measure.hpp"

namespace crofton {

/// k-dimensional parallelotope origin + sum a_j edges_j, a in [0, 1]^k, in
/// R^n (edges is n x k).
struct Region {
  Vec origin;
  Mat edges;

  static Region parallelotope(Vec origin, Mat edges);
  /// [-1/2, 1/2]^n.
  static Region unit_cube(int n);

  int ambient_dim() const { return static_cast<int>(edges.rows()); }
  int dim() const { return static_cast<int>(edges.cols()); }
  double volume() const;
  Vec center() const;
  /// Radius of the smallest ball about center() containing every vertex.
  double radius() const;
  /// Orthonormal basis of the carrier subspace.
  Mat frame() const;
};

struct ProductEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
  long singular = 0;  // near-singular intersections counted as misses
};

/// Monte Carlo estimate of (mu_1 x ... x mu_k)(T_region): the measure of
/// k-tuples of affine hyperplanes whose common intersection meets the
/// region. Needs k = region.dim() factors in R^{region.ambient_dim()}.
ProductEstimate density_product_mc(std::span<const NormalMeasure1> factors, const Region& region,
                                   const MonteCarloOptions& options = {});

/// d_1(A_1) ... d_1(A_k) against k! d_k(A_1, ..., A_k), both evaluated on
/// the region.
IdentityReport verify_product_identity(std::span<const ConvexBody> bodies, const Region& region, double tol,
                                       const MonteCarloOptions& options = {}, int bandwidth = 0);

}  // namespace crofton
