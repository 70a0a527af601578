#include "crofton/constants.hpp"

#include <cmath>
#include <numbers>

#include "crofton/error.hpp"

namespace crofton {

double sphere_volume(int p) {
  if (p < 0) throw Error("bad-dimension", "negative sphere dimension");
  const double q = 0.5 * (p + 1);
  return 2.0 * std::pow(std::numbers::pi, q) / std::tgamma(q);
}

double ball_volume(int p) {
  if (p < 0) throw Error("bad-dimension", "negative ball dimension");
  const double q = 0.5 * p;
  return std::pow(std::numbers::pi, q) / std::tgamma(q + 1.0);
}

double factorial(int n) { return std::tgamma(n + 1.0); }

DimensionalConstants DimensionalConstants::of(int p) {
  return {p, sphere_volume(p), ball_volume(p)};
}

double DimensionalConstants::identity_residual() const {
  return v_p * sigma_p - 2.0 * std::pow(2.0 * std::numbers::pi, p) / factorial(p);
}

}  // namespace crofton
