#include "crofton/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "crofton/error.hpp"

namespace crofton {

namespace {
constexpr double kPi = std::numbers::pi;
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw Error("bad-resolution", "Gauss-Legendre needs at least one node");
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

GaussLegendre gauss_legendre(int n, double a, double b) {
  GaussLegendre rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

SphereRule sphere_rule(int d, int resolution) {
  if (resolution < 1) throw Error("bad-resolution", "sphere rule resolution must be positive");
  SphereRule rule;
  switch (d) {
    case 1: {
      rule.nodes = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
      rule.weights = {1.0, 1.0};
      break;
    }
    case 2: {
      const int n = resolution;
      rule.nodes.reserve(n);
      for (int j = 0; j < n; ++j) {
        const double t = 2.0 * kPi * j / n;
        Vec u(2);
        u << std::cos(t), std::sin(t);
        rule.nodes.push_back(u);
        rule.weights.push_back(2.0 * kPi / n);
      }
      break;
    }
    case 3: {
      const GaussLegendre gl = gauss_legendre(resolution);
      const int nphi = 2 * resolution;
      for (int i = 0; i < resolution; ++i) {
        const double z = gl.nodes[i];
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int j = 0; j < nphi; ++j) {
          const double phi = 2.0 * kPi * (j + 0.5) / nphi;
          Vec u(3);
          u << r * std::cos(phi), r * std::sin(phi), z;
          rule.nodes.push_back(u);
          rule.weights.push_back(gl.weights[i] * 2.0 * kPi / nphi);
        }
      }
      break;
    }
    case 4: {
      const GaussLegendre gl = gauss_legendre(resolution, 0.0, kPi);
      const SphereRule inner = sphere_rule(3, resolution);
      for (int i = 0; i < resolution; ++i) {
        const double psi = gl.nodes[i];
        const double s = std::sin(psi);
        for (std::size_t j = 0; j < inner.size(); ++j) {
          Vec u(4);
          u(0) = std::cos(psi);
          u.tail(3) = s * inner.nodes[j];
          rule.nodes.push_back(u);
          rule.weights.push_back(gl.weights[i] * s * s * inner.weights[j]);
        }
      }
      break;
    }
    default:
      throw Error("bad-dimension", "sphere rules exist for ambient dimensions 1..4");
  }
  return rule;
}

SphereRule polar_angle_rule(int resolution, const Vec& pole) {
  if (pole.size() != 3) throw Error("bad-dimension", "polar_angle_rule lives on S^2");
  const Vec axis = pole.normalized();
  const Mat side = orthogonal_complement(axis);
  const GaussLegendre gl = gauss_legendre(resolution, 0.0, kPi);
  const int nphi = 2 * resolution;
  SphereRule rule;
  for (int i = 0; i < resolution; ++i) {
    const double th = gl.nodes[i];
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * kPi * (j + 0.5) / nphi;
      rule.nodes.push_back(std::cos(th) * axis +
                           std::sin(th) * (std::cos(phi) * side.col(0) + std::sin(phi) * side.col(1)));
      rule.weights.push_back(gl.weights[i] * std::sin(th) * 2.0 * kPi / nphi);
    }
  }
  return rule;
}

}  // namespace crofton
