#pragma once

#include <vector>

#include "crofton/linalg.hpp"

namespace crofton {

// Real, fully normalized spherical harmonics on S^2 (L2-orthonormal for the
// surface measure). Index of (l, m), -l <= m <= l, is l*l + l + m; m > 0 are
// cosine-type, m < 0 sine-type.
inline int sh_index(int l, int m) { return l * l + l + m; }
inline int sh_count(int max_degree) { return (max_degree + 1) * (max_degree + 1); }

/// Values of all harmonics up to `max_degree` at the unit vector x.
std::vector<double> spherical_harmonics(int max_degree, const Vec& x);

/// Values and ambient gradients (rows, 3 columns) of a polynomial extension
/// of every harmonic up to `max_degree`. Only the tangential part of the
/// gradient is intrinsic.
void spherical_harmonics(int max_degree, const Vec& x, std::vector<double>& values, Mat& gradients);

/// A single harmonic Y_lm with its ambient gradient.
double spherical_harmonic(int l, int m, const Vec& x, Vec* gradient = nullptr);

}  // namespace crofton
