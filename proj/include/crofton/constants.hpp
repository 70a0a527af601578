#pragma once

namespace crofton {

/// Volume of the p-dimensional unit sphere S^p (sigma_0 = 2, sigma_1 = 2 pi,
/// sigma_2 = 4 pi).
double sphere_volume(int p);

/// Volume of the p-dimensional unit ball (v_0 = 1, v_1 = 2, v_2 = pi).
double ball_volume(int p);

/// n!
double factorial(int n);

struct DimensionalConstants {
  int p = 0;
  double sigma_p = 0.0;
  double v_p = 0.0;

  static DimensionalConstants of(int p);

  /// v_p * sigma_p - 2 (2 pi)^p / p!, which vanishes identically.
  double identity_residual() const;
};

}  // namespace crofton
