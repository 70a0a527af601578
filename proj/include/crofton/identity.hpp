#pragma once

#include <cstdint>
#include <string>

namespace crofton {

/// Outcome of a numerical identity check: both sides, the Monte Carlo
/// standard error of the estimated side (0 for quadrature checks), and the
/// verdict at the stated relative tolerance.
struct IdentityReport {
  std::string identity;
  double lhs = 0.0;
  double rhs = 0.0;
  double stderr_ = 0.0;
  long samples = 0;
  double tol = 0.0;
  bool pass = false;

  double relative_deviation() const;
};

struct MonteCarloOptions {
  long samples = 1000000;
  std::uint64_t seed = 1;
  int workers = 0;
};

}  // namespace crofton
