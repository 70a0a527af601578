#include "crofton/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "crofton/constants.hpp"
#include "crofton/error.hpp"
#include "crofton/quadrature.hpp"

namespace crofton {

namespace {
constexpr double kPi = std::numbers::pi;
}

Manifold Manifold::product(std::vector<int> factor_dims) {
  if (factor_dims.empty()) throw Error("unknown-manifold", "a manifold needs at least one factor");
  Manifold m;
  for (int d : factor_dims) {
    if (d != 1 && d != 2) throw Error("unknown-manifold", "factors must be circles (1) or 2-spheres (2)");
    m.ambient_offsets_.push_back(m.ambient_dim_);
    m.chart_offsets_.push_back(m.dim_);
    m.ambient_dim_ += d + 1;
    m.dim_ += d;
  }
  m.factors_ = std::move(factor_dims);
  return m;
}

Manifold Manifold::circle() { return product({1}); }
Manifold Manifold::torus(int n) {
  if (n < 1) throw Error("unknown-manifold", "torus dimension must be positive");
  return product(std::vector<int>(n, 1));
}
Manifold Manifold::sphere2() { return product({2}); }

Manifold Manifold::parse(const std::string& name) {
  if (name == "circle" || name == "s1") return circle();
  if (name == "s2" || name == "sphere") return sphere2();
  for (const std::string prefix : {"torus", "t"}) {
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
      const std::string rest = name.substr(prefix.size());
      if (rest.find_first_not_of("0123456789") == std::string::npos) return torus(std::stoi(rest));
    }
  }
  if (name.find('x') != std::string::npos) {
    std::vector<int> dims;
    std::size_t start = 0;
    while (start <= name.size()) {
      const std::size_t end = std::min(name.find('x', start), name.size());
      const std::string part = name.substr(start, end - start);
      if (part == "s1" || part == "circle") {
        dims.push_back(1);
      } else if (part == "s2") {
        dims.push_back(2);
      } else {
        throw Error("unknown-manifold", "unknown factor '" + part + "'; supported: " + supported_names());
      }
      start = end + 1;
    }
    return product(dims);
  }
  throw Error("unknown-manifold", "unknown manifold '" + name + "'; supported: " + supported_names());
}

std::string Manifold::supported_names() { return "circle (s1), torus<n> (t<n>), s2, products like s2xs1"; }

bool Manifold::is_torus() const {
  for (int d : factors_) {
    if (d != 1) return false;
  }
  return true;
}

std::string Manifold::name() const {
  if (factors_.size() == 1) return factors_[0] == 1 ? "circle" : "s2";
  if (is_torus()) return "torus" + std::to_string(dim_);
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out += (i ? "x" : "") + std::string(factors_[i] == 1 ? "s1" : "s2");
  return out;
}

Vec Manifold::embed(const Vec& chart) const {
  if (chart.size() != dim_) throw Error("dimension-mismatch", "chart point has wrong length");
  Vec x(ambient_dim_);
  for (int j = 0; j < factor_count(); ++j) {
    const int a = ambient_offsets_[j], c = chart_offsets_[j];
    if (factors_[j] == 1) {
      x(a) = std::cos(chart(c));
      x(a + 1) = std::sin(chart(c));
    } else {
      const double th = chart(c), ph = chart(c + 1);
      x(a) = std::sin(th) * std::cos(ph);
      x(a + 1) = std::sin(th) * std::sin(ph);
      x(a + 2) = std::cos(th);
    }
  }
  return x;
}

Mat Manifold::chart_jacobian(const Vec& chart) const {
  Mat j = Mat::Zero(ambient_dim_, dim_);
  for (int f = 0; f < factor_count(); ++f) {
    const int a = ambient_offsets_[f], c = chart_offsets_[f];
    if (factors_[f] == 1) {
      j(a, c) = -std::sin(chart(c));
      j(a + 1, c) = std::cos(chart(c));
    } else {
      const double th = chart(c), ph = chart(c + 1);
      j(a, c) = std::cos(th) * std::cos(ph);
      j(a + 1, c) = std::cos(th) * std::sin(ph);
      j(a + 2, c) = -std::sin(th);
      j(a, c + 1) = -std::sin(th) * std::sin(ph);
      j(a + 1, c + 1) = std::sin(th) * std::cos(ph);
    }
  }
  return j;
}

Vec Manifold::chart_of(const Vec& point) const {
  Vec chart(dim_);
  for (int f = 0; f < factor_count(); ++f) {
    const int a = ambient_offsets_[f], c = chart_offsets_[f];
    if (factors_[f] == 1) {
      chart(c) = std::atan2(point(a + 1), point(a));
    } else {
      chart(c) = std::acos(std::clamp(point(a + 2), -1.0, 1.0));
      chart(c + 1) = std::atan2(point(a + 1), point(a));
    }
  }
  return chart;
}

Mat Manifold::tangent_frame(const Vec& point) const {
  if (point.size() != ambient_dim_) throw Error("dimension-mismatch", "point has wrong length");
  Mat frame = Mat::Zero(ambient_dim_, dim_);
  for (int f = 0; f < factor_count(); ++f) {
    const int a = ambient_offsets_[f], c = chart_offsets_[f];
    if (factors_[f] == 1) {
      const Vec p = point.segment(a, 2).normalized();
      frame(a, c) = -p(1);
      frame(a + 1, c) = p(0);
    } else {
      frame.block(a, c, 3, 2) = orthogonal_complement(Vec(point.segment(a, 3)));
    }
  }
  return frame;
}

Vec Manifold::retract(const Vec& ambient) const {
  Vec x = ambient;
  for (int f = 0; f < factor_count(); ++f) {
    const int a = ambient_offsets_[f], len = factors_[f] + 1;
    x.segment(a, len).normalize();
  }
  return x;
}

double Manifold::volume() const {
  double v = 1.0;
  for (int d : factors_) v *= sphere_volume(d);
  return v;
}

int Manifold::default_resolution(int factor_dim) const {
  if (factor_dim == 1) return dim_ >= 3 ? 32 : 64;
  return factors_.size() == 1 ? 50 : 16;
}

Manifold::Quadrature Manifold::quadrature(int resolution) const {
  // per-factor rules in chart coordinates
  std::vector<std::vector<std::pair<Vec, double>>> rules;
  for (int d : factors_) {
    const int res = resolution > 0 ? resolution : default_resolution(d);
    std::vector<std::pair<Vec, double>> rule;
    if (d == 1) {
      for (int i = 0; i < res; ++i) rule.push_back({Vec::Constant(1, 2.0 * kPi * i / res), 2.0 * kPi / res});
    } else {
      const GaussLegendre gl = gauss_legendre(res);
      const int nphi = 2 * res;
      for (int i = 0; i < res; ++i) {
        for (int j = 0; j < nphi; ++j) {
          Vec c(2);
          c << std::acos(gl.nodes[i]), 2.0 * kPi * (j + 0.5) / nphi;
          rule.push_back({c, gl.weights[i] * 2.0 * kPi / nphi});
        }
      }
    }
    rules.push_back(std::move(rule));
  }
  Quadrature q;
  std::vector<std::size_t> idx(rules.size(), 0);
  while (true) {
    Vec chart(dim_);
    double w = 1.0;
    for (std::size_t f = 0; f < rules.size(); ++f) {
      const auto& [c, wf] = rules[f][idx[f]];
      chart.segment(chart_offsets_[f], c.size()) = c;
      w *= wf;
    }
    q.points.push_back(embed(chart));
    q.weights.push_back(w);
    std::size_t f = 0;
    while (f < rules.size() && ++idx[f] == rules[f].size()) idx[f++] = 0;
    if (f == rules.size()) break;
  }
  return q;
}

}  // namespace crofton
