#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "crofton/function_space.hpp"

namespace crofton {

/// Uniform point on the unit sphere of R^m (normalized Gaussian vector).
Vec sample_unit(int m, std::mt19937_64& rng);

struct ZeroCount {
  int count = 0;
  bool suspect = false;
  std::vector<Vec> roots;  // angle (1d) or ambient point (2d)
};

/// Zeros of a smooth 2 pi-periodic function: sign changes on a uniform grid
/// refined by bisection. Grid-level local minima of |f| below 1e-9 without a
/// sign change (tangential zeros) mark the count suspect.
ZeroCount count_zeros_1d(const std::function<double(double)>& f, int grid_size = 4096);

/// Same, with the grid values f(2 pi i / N) supplied by the caller.
ZeroCount count_zeros_1d(const Vec& grid_values, const std::function<double(double)>& f);

/// Two functions on a 2-manifold, evaluated together: values and ambient
/// gradients (2 x N).
using FieldPair = std::function<void(const Vec& point, Eigen::Vector2d& values, Mat& gradients)>;

struct Grid2dOptions {
  int rows = 0;  // 0 = default: 256 (torus) / 192 polar intervals (S^2)
  int cols = 0;  // 0 = default: 256 (torus) / 384 azimuth steps (S^2)
  int max_newton_iters = 30;
  bool recount = true;  // recount at the doubled grid; disagreement is suspect
};

/// Common zeros of two functions on T^2 or S^2: Newton (in the tangent frame,
/// with retraction) from every grid cell where both functions change sign
/// at the corners, validated (|f| < 1e-10, Jacobian condition < 1e8) and
/// deduplicated at chord distance 1e-6.
ZeroCount count_zeros_2d(const FieldPair& field, const Manifold& manifold, const Grid2dOptions& options = {});

struct EstimateOptions {
  int workers = 0;
  int grid_1d = 4096;
  Grid2dOptions grid_2d;
  double max_suspect_rate = 0.05;
};

struct ZeroCountEstimate {
  long samples = 0;        // requested
  long valid_samples = 0;  // used in the mean
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t seed = 0;
  std::map<int, long> histogram;
  long suspect_samples = 0;
  std::vector<int> counts;     // per sample
  std::vector<bool> suspects;  // per sample
};

/// Mean number of isolated common zeros of independent uniform unit-norm
/// elements of the (orthonormal) spaces. Circle, T^2, S^2, and T^n with each
/// space depending on its own circle. Throws "unreliable-oracle" when more
/// than max_suspect_rate of the samples are suspect.
ZeroCountEstimate estimate(std::span<const FunctionSpace> spaces, long samples, std::uint64_t seed,
                           const EstimateOptions& options = {});

}  // namespace crofton
