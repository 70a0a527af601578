#pragma once

#include <span>
#include <string>
#include <vector>

#include "crofton/function_space.hpp"
#include "crofton/volume.hpp"

namespace crofton {

struct PredictOptions {
  int resolution = 0;  // manifold quadrature size, 0 = default
  VolumeOptions volume;
  int workers = 0;
};

struct Prediction {
  double value = 0.0;
  std::string method = "quadrature";
  long nodes = 0;
  std::vector<double> node_mixed_volume;  // V_n(E_1(x), ..., E_n(x)) per node
  std::string inputs;                     // manifold and space labels
};

/// Average number of common zeros: n!/(2 pi)^n times the integral over the
/// manifold of the mixed volume of the F-ellipsoids of the n spaces.
Prediction predict(std::span<const FunctionSpace> spaces, const PredictOptions& options = {});

/// 2 / (sigma_n n^{n/2}) sqrt(lambda_1 ... lambda_n) vol(X).
double gichev_closed_form(std::span<const double> lambdas, int n, double vol);

/// 2 / (sigma_n n^{n/2}) lambda^{n/2} vol(X).
double upper_bound(double lambda, int n, double vol);

/// Whether the eigenvalues of the pull-back metric stay constant (relative
/// `tol`) over the quadrature nodes.
bool is_invariant(const FunctionSpace& space, int resolution = 0, double tol = 1e-8);

struct HodgeReport {
  // M(V_1..V_n)^2 against M(.., V_{n-1}, V_{n-1}) M(.., V_n, V_n)
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  // M(V_1..V_n)^n against prod_i M(V_i, ..., V_i)
  double corollary_lhs = 0.0;
  double corollary_rhs = 0.0;
  bool corollary_holds = false;
  bool invariant = false;        // every space passed is_invariant
  bool equality_expected = false;  // isotropy-irreducible manifold (S^2)
  bool equality = false;
  bool pass = false;
  std::string advisory;  // "not-invariant" when the inequalities are not guaranteed
};

HodgeReport hodge_report(std::span<const FunctionSpace> spaces, const PredictOptions& options = {});

}  // namespace crofton
