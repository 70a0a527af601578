#pragma once

#include <functional>
#include <vector>

#include "crofton/linalg.hpp"

namespace crofton {

/// A function on Gr(1, V), dim V in {1, 2, 3}, stored as a finite harmonic
/// expansion of the unit direction u spanning the line.
///   dim 1: coeffs = {c} (Gr(1, R) is a point).
///   dim 2: u = (cos t, sin t); coeffs = {a_0, a_1, b_1, ..., a_L, b_L} for
///          a_0 + sum a_k cos kt + b_k sin kt.
///   dim 3: coeffs[sh_index(l, m)] for l <= L.
/// A function on lines is even; odd-degree coefficients must vanish.
struct HarmonicGauge {
  int dim = 2;
  int bandwidth = 0;
  std::vector<double> coeffs;

  static HarmonicGauge zero(int dim, int bandwidth);
  static HarmonicGauge constant(int dim, double value, int bandwidth = 0);

  double operator()(const Vec& u) const;

  /// Largest odd-degree coefficient magnitude.
  double odd_part() const;
  /// Degree of the harmonic stored at coefficient index i.
  int degree_of(int i) const;
};

inline int default_bandwidth(int dim) { return dim == 2 ? 64 : dim == 3 ? 16 : 0; }

/// Least-squares projection of f onto the harmonics of degree <= bandwidth,
/// computed by quadrature exact for the represented degrees.
HarmonicGauge project(const std::function<double(const Vec&)>& f, int dim, int bandwidth);

/// Multiplier of the cosine transform on degree-`degree` harmonics, for the
/// probability Haar measure on Gr(1, V). Zero for odd degrees.
double cosine_multiplier(int dim, int degree);

/// T f(G) = int f(H) |cos(H, G)| dH. Throws "not-even" if odd-degree
/// coefficients are present.
HarmonicGauge cosine_transform(const HarmonicGauge& f);

/// Coefficient-wise inverse. Throws "not-in-range" if a represented degree
/// has a zero multiplier (odd degrees).
HarmonicGauge inverse_cosine_transform(const HarmonicGauge& f);

HarmonicGauge operator+(const HarmonicGauge& a, const HarmonicGauge& b);
HarmonicGauge operator*(double c, const HarmonicGauge& a);

}  // namespace crofton
