#include "crofton/harmonics.hpp"

#include <cmath>
#include <numbers>

#include "crofton/error.hpp"

namespace crofton {

namespace {

// N_lm = sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!), times sqrt 2 for m != 0.
double normalization(int l, int m) {
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
  double n = std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi) * ratio);
  return m == 0 ? n : std::sqrt(2.0) * n;
}

}  // namespace

void spherical_harmonics(int max_degree, const Vec& x, std::vector<double>& values, Mat& gradients) {
  if (max_degree < 0) throw Error("bad-degree", "harmonic degree must be non-negative");
  if (x.size() != 3) throw Error("dimension-mismatch", "spherical harmonics take points of R^3");
  const int count = sh_count(max_degree);
  values.assign(count, 0.0);
  gradients.setZero(count, 3);
  const double px = x(0), py = x(1), z = x(2);

  // C_m + i S_m = (x + i y)^m
  std::vector<double> c(max_degree + 1), s(max_degree + 1);
  c[0] = 1.0;
  s[0] = 0.0;
  for (int m = 1; m <= max_degree; ++m) {
    c[m] = px * c[m - 1] - py * s[m - 1];
    s[m] = px * s[m - 1] + py * c[m - 1];
  }

  // Q_l^m(z) = d^m P_l / dz^m and its z-derivative.
  std::vector<double> q(max_degree + 1), dq(max_degree + 1);
  double qmm = 1.0;
  for (int m = 0; m <= max_degree; ++m) {
    if (m > 0) qmm *= (2.0 * m - 1.0);
    q[m] = qmm;
    dq[m] = 0.0;
    if (m + 1 <= max_degree) {
      q[m + 1] = (2.0 * m + 1.0) * z * qmm;
      dq[m + 1] = (2.0 * m + 1.0) * qmm;
    }
    for (int l = m + 2; l <= max_degree; ++l) {
      q[l] = ((2.0 * l - 1.0) * z * q[l - 1] - (l + m - 1.0) * q[l - 2]) / (l - m);
      dq[l] = ((2.0 * l - 1.0) * (q[l - 1] + z * dq[l - 1]) - (l + m - 1.0) * dq[l - 2]) / (l - m);
    }
    for (int l = m; l <= max_degree; ++l) {
      const double n = normalization(l, m);
      // gradient of C_m: m (C_{m-1}, -S_{m-1}, 0); of S_m: m (S_{m-1}, C_{m-1}, 0)
      const double gcx = m > 0 ? m * c[m - 1] : 0.0;
      const double gcy = m > 0 ? -m * s[m - 1] : 0.0;
      const double gsx = m > 0 ? m * s[m - 1] : 0.0;
      const double gsy = m > 0 ? m * c[m - 1] : 0.0;
      const int ic = sh_index(l, m);
      values[ic] = n * q[l] * c[m];
      gradients(ic, 0) = n * q[l] * gcx;
      gradients(ic, 1) = n * q[l] * gcy;
      gradients(ic, 2) = n * dq[l] * c[m];
      if (m > 0) {
        const int is = sh_index(l, -m);
        values[is] = n * q[l] * s[m];
        gradients(is, 0) = n * q[l] * gsx;
        gradients(is, 1) = n * q[l] * gsy;
        gradients(is, 2) = n * dq[l] * s[m];
      }
    }
  }
}

std::vector<double> spherical_harmonics(int max_degree, const Vec& x) {
  std::vector<double> values;
  Mat gradients;
  spherical_harmonics(max_degree, x, values, gradients);
  return values;
}

double spherical_harmonic(int l, int m, const Vec& x, Vec* gradient) {
  if (std::abs(m) > l) throw Error("bad-degree", "spherical harmonic order exceeds degree");
  std::vector<double> values;
  Mat gradients;
  spherical_harmonics(l, x, values, gradients);
  const int i = sh_index(l, m);
  if (gradient) *gradient = gradients.row(i).transpose();
  return values[i];
}

}  // namespace crofton
