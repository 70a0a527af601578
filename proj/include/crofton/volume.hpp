#pragma once

#include <cstdint>
#include <span>

#include "crofton/convex_body.hpp"

namespace crofton {

enum class VolumeMethod {
  // Closed forms for ellipsoids, balls and zonotopes; sums are reduced by
  // peeling segments off (prism formula) down to a sum of full-rank
  // ellipsoids, whose volume is the support-function integral
  // (1/n) int h det(D^2 h) over the sphere.
  Analytic,
  // Membership test x in K iff <x,u> <= h(u) on a direction grid, counted
  // on a regular grid over the bounding box. Over-estimates slightly since
  // only finitely many support constraints are checked.
  MembershipGrid,
  // Same membership test on uniform samples from the bounding box.
  MonteCarlo,
};

struct VolumeOptions {
  int smooth_resolution = 0;  // sphere-rule resolution, 0 = per-dimension default
  int grid_resolution = 0;    // grid points per axis, 0 = per-dimension default
  int directions = 512;       // membership direction grid size
  long mc_samples = 200000;
  std::uint64_t mc_seed = 1;
};

double volume(const ConvexBody& body, VolumeMethod method, const VolumeOptions& options = {});

/// Analytic when available, membership grid otherwise.
double volume(const ConvexBody& body, const VolumeOptions& options = {});

/// Mixed volume V(A_1, ..., A_n) of n bodies in R^n by polarization:
/// (1/n!) sum over nonempty S of (-1)^{n-|S|} vol(sum_{i in S} A_i).
double mixed_volume(std::span<const ConvexBody> bodies, const VolumeOptions& options = {});

/// k-volume of the orthogonal projection onto the span of the orthonormal
/// columns of `frame` (n x k).
double projection_volume(const ConvexBody& body, const Mat& frame, const VolumeOptions& options = {});

struct AlexandrovFenchelReport {
  double lhs = 0.0;  // V(A_1, ..., A_n)^2
  double rhs = 0.0;  // V(.., A_{n-1}, A_{n-1}) V(.., A_n, A_n)
  bool holds = false;
};

AlexandrovFenchelReport check_alexandrov_fenchel(std::span<const ConvexBody> bodies, double tol = 1e-9,
                                                 const VolumeOptions& options = {});

/// Fixed direction grid used by the membership volume: uniform angles for
/// n = 2, Fibonacci sphere for n = 3, seeded Gaussian directions for n = 4.
std::vector<Vec> direction_grid(int dim, int count);

/// Support-domination test h_inner <= h_outer (+tol) on the direction grid.
bool support_dominates(const ConvexBody& outer, const ConvexBody& inner, int directions = 512,
                       double tol = 1e-12);

}  // namespace crofton
