#include "crofton/cosine_transform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "crofton/error.hpp"
#include "crofton/harmonics.hpp"
#include "crofton/quadrature.hpp"

namespace crofton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOddTol = 1e-12;

int coeff_count(int dim, int bandwidth) {
  switch (dim) {
    case 1: return 1;
    case 2: return 2 * bandwidth + 1;
    case 3: return sh_count(bandwidth);
    default: throw Error("bad-dimension", "harmonic gauges exist for dim V in 1..3");
  }
}

double compute_multiplier(int dim, int degree) {
  if (dim == 1) return degree == 0 ? 1.0 : 0.0;
  if (degree % 2 != 0) return 0.0;
  if (dim == 2) {
    // (1 / 2 pi) int |cos t| cos kt dt, split where |cos| has kinks.
    const GaussLegendre gl = gauss_legendre(2 * degree + 64, -kPi / 2, kPi / 2);
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double t = gl.nodes[i];
      acc += gl.weights[i] * std::cos(t) * std::cos(degree * t);
    }
    // the half-period [pi/2, 3pi/2] contributes the same for even degree
    return 2.0 * acc / (2.0 * kPi);
  }
  // Funk-Hecke: int_0^1 t P_l(t) dt
  const GaussLegendre gl = gauss_legendre(degree / 2 + 4, 0.0, 1.0);
  double acc = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double t = gl.nodes[i];
    double p0 = 1.0, p1 = t;
    if (degree == 0) p1 = 1.0;
    for (int k = 2; k <= degree; ++k) {
      const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    acc += gl.weights[i] * t * p1;
  }
  return acc;
}

void require_compatible(const HarmonicGauge& a, const HarmonicGauge& b) {
  if (a.dim != b.dim) throw Error("dimension-mismatch", "harmonic gauges live on different Grassmannians");
}

HarmonicGauge resized(const HarmonicGauge& g, int bandwidth) {
  HarmonicGauge out = HarmonicGauge::zero(g.dim, bandwidth);
  const std::size_t n = std::min(out.coeffs.size(), g.coeffs.size());
  // both layouts order coefficients by degree, so a prefix copy suffices
  for (std::size_t i = 0; i < n; ++i) out.coeffs[i] = g.coeffs[i];
  return out;
}

}  // namespace

HarmonicGauge HarmonicGauge::zero(int dim, int bandwidth) {
  if (bandwidth < 0) throw Error("bad-bandwidth", "bandwidth must be non-negative");
  HarmonicGauge g;
  g.dim = dim;
  g.bandwidth = dim == 1 ? 0 : bandwidth;
  g.coeffs.assign(coeff_count(dim, g.bandwidth), 0.0);
  return g;
}

HarmonicGauge HarmonicGauge::constant(int dim, double value, int bandwidth) {
  HarmonicGauge g = zero(dim, bandwidth);
  // the degree-0 harmonic on S^2 is 1 / sqrt(4 pi)
  g.coeffs[0] = dim == 3 ? value * std::sqrt(4.0 * kPi) : value;
  return g;
}

int HarmonicGauge::degree_of(int i) const {
  switch (dim) {
    case 1: return 0;
    case 2: return (i + 1) / 2;
    default: return static_cast<int>(std::floor(std::sqrt(static_cast<double>(i))));
  }
}

double HarmonicGauge::odd_part() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (degree_of(static_cast<int>(i)) % 2 != 0) worst = std::max(worst, std::abs(coeffs[i]));
  }
  return worst;
}

double HarmonicGauge::operator()(const Vec& u) const {
  if (u.size() != dim) throw Error("dimension-mismatch", "direction has wrong length for this gauge");
  switch (dim) {
    case 1: return coeffs[0];
    case 2: {
      const double t = std::atan2(u(1), u(0));
      double acc = coeffs[0];
      for (int k = 1; k <= bandwidth; ++k) {
        acc += coeffs[2 * k - 1] * std::cos(k * t) + coeffs[2 * k] * std::sin(k * t);
      }
      return acc;
    }
    default: {
      const std::vector<double> y = spherical_harmonics(bandwidth, u.normalized());
      double acc = 0.0;
      for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * y[i];
      return acc;
    }
  }
}

HarmonicGauge project(const std::function<double(const Vec&)>& f, int dim, int bandwidth) {
  HarmonicGauge g = HarmonicGauge::zero(dim, bandwidth);
  switch (dim) {
    case 1:
      g.coeffs[0] = f(Vec::Constant(1, 1.0));
      break;
    case 2: {
      const int n = 4 * bandwidth + 8;
      for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        Vec u(2);
        u << std::cos(t), std::sin(t);
        const double v = f(u);
        g.coeffs[0] += v / n;
        for (int k = 1; k <= bandwidth; ++k) {
          g.coeffs[2 * k - 1] += 2.0 * v * std::cos(k * t) / n;
          g.coeffs[2 * k] += 2.0 * v * std::sin(k * t) / n;
        }
      }
      break;
    }
    case 3: {
      const SphereRule rule = sphere_rule(3, 2 * bandwidth + 4);
      for (std::size_t j = 0; j < rule.size(); ++j) {
        const double v = f(rule.nodes[j]) * rule.weights[j];
        const std::vector<double> y = spherical_harmonics(bandwidth, rule.nodes[j]);
        for (std::size_t i = 0; i < y.size(); ++i) g.coeffs[i] += v * y[i];
      }
      break;
    }
    default:
      throw Error("bad-dimension", "harmonic gauges exist for dim V in 1..3");
  }
  return g;
}

double cosine_multiplier(int dim, int degree) {
  if (dim < 1 || dim > 3) throw Error("bad-dimension", "cosine transform is implemented for dim V in 1..3");
  if (degree < 0) throw Error("bad-degree", "harmonic degree must be non-negative");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, double> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({dim, degree});
  if (it == cache.end()) it = cache.emplace(std::make_pair(dim, degree), compute_multiplier(dim, degree)).first;
  return it->second;
}

HarmonicGauge cosine_transform(const HarmonicGauge& f) {
  const double scale = std::max(1.0, Eigen::Map<const Vec>(f.coeffs.data(), f.coeffs.size()).cwiseAbs().maxCoeff());
  if (f.odd_part() > kOddTol * scale) throw Error("not-even", "odd-degree coefficients present; a gauge on lines is even");
  HarmonicGauge out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] *= cosine_multiplier(f.dim, f.degree_of(static_cast<int>(i)));
  }
  return out;
}

HarmonicGauge inverse_cosine_transform(const HarmonicGauge& f) {
  const double scale = std::max(1.0, Eigen::Map<const Vec>(f.coeffs.data(), f.coeffs.size()).cwiseAbs().maxCoeff());
  HarmonicGauge out = f;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    const int degree = f.degree_of(static_cast<int>(i));
    const double c = cosine_multiplier(f.dim, degree);
    if (std::abs(c) < 1e-14) {
      if (std::abs(f.coeffs[i]) > kOddTol * scale) {
        throw Error("not-in-range", "cosine transform multiplier vanishes at degree " + std::to_string(degree));
      }
      out.coeffs[i] = 0.0;
    } else {
      out.coeffs[i] /= c;
    }
  }
  return out;
}

HarmonicGauge operator+(const HarmonicGauge& a, const HarmonicGauge& b) {
  require_compatible(a, b);
  HarmonicGauge out = resized(a, std::max(a.bandwidth, b.bandwidth));
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

HarmonicGauge operator*(double c, const HarmonicGauge& a) {
  HarmonicGauge out = a;
  for (auto& x : out.coeffs) x *= c;
  return out;
}

}  // namespace crofton
