#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crofton/convex_body.hpp"
#include "crofton/density_product.hpp"

namespace crofton {

/// One run of the command-line tool. Stored on disk as INI text with
/// sections [run], [params], [output]; zero / empty values mean "use the
/// mode's default".
struct RunConfig {
  // [run]
  std::string mode;  // predict | simulate | compare | verify | transform
  std::string manifold;
  std::vector<std::string> spaces;
  std::string identity;  // verify: product | alesker | haar2 | crofton-product | af | hodge | constants
  std::string bodies;
  std::string region;
  // [params]
  long samples = 0;
  std::uint64_t seed = 1;
  double tol = 0.0;
  int quadrature = 0;
  int bandwidth = 0;
  int workers = 0;
  std::string tangent_dims;  // "2,2"
  std::string theta;         // edges "1,0,0,0;0,0,1,0"
  std::string subspace;      // orthonormal basis "1,0,0;0,1,0"
  std::string coefficients;  // transform input "a0,a1,b1,..."
  int dim = 0;
  bool invert = false;
  // [output]
  std::string report;
  std::string csv;

  bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
std::string serialize_config(const RunConfig& config);
RunConfig load_config(const std::string& path);

/// Splits at commas outside brackets and trims.
std::vector<std::string> split_list(const std::string& text, char sep = ',');

/// Short body syntax, terms joined by '+', each optionally "c*":
///   disk[r]            disk of radius r (default 1) in R^2
///   ball[r] / ball3[r] unit ball in R^2 / R^3 scaled by r
///   ellipsoid[a,b,..]  diagonal shape matrix diag(a, b, ..)
///   ellipsoid[q11,q12;q21,q22]  full shape matrix
///   segment[v1,..]     segment [-v, v]
///   zonotope[g1;g2;..] sum of segments [-g, g]
/// or a JSON body object.
ConvexBody parse_body(const std::string& text);
std::vector<ConvexBody> parse_bodies(const std::string& text);

/// unit-square, unit-cube (centered, side 1), segment[L] (along e1 from the
/// origin, in R^dim), parallelotope[o;e1;e2..].
Region parse_region(const std::string& text, int dim);

/// "a,b;c,d" -> columns (a,b), (c,d).
Mat parse_columns(const std::string& text);
std::vector<double> parse_numbers(const std::string& text);

}  // namespace crofton
