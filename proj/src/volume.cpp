#include "crofton/volume.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>

#include "crofton/constants.hpp"
#include "crofton/error.hpp"
#include "crofton/quadrature.hpp"

namespace crofton {

namespace {

int default_smooth_resolution(int dim) {
  switch (dim) {
    case 2: return 512;
    case 3: return 48;
    default: return 20;
  }
}

int default_grid_resolution(int dim) {
  switch (dim) {
    case 1: return 4096;
    case 2: return 400;
    case 3: return 64;
    default: return 20;
  }
}

const SphereRule& cached_sphere_rule(int d, int resolution) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, SphereRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({d, resolution});
  if (it == cache.end()) it = cache.emplace(std::make_pair(d, resolution), sphere_rule(d, resolution)).first;
  return it->second;
}

template <int N>
double smooth_sum_volume_fixed(const std::vector<Mat>& shapes, const SphereRule& rule) {
  using M = Eigen::Matrix<double, N, N>;
  using V = Eigen::Matrix<double, N, 1>;
  std::vector<M> qs;
  qs.reserve(shapes.size());
  for (const auto& q : shapes) qs.push_back(q);
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const V u = rule.nodes[k];
    double h = 0.0;
    // D^2 h annihilates u, so det(D^2 h + u u^T) is the determinant of its
    // restriction to the tangent space u-perp.
    M hess = u * u.transpose();
    for (const auto& q : qs) {
      const V qu = q * u;
      const double hi = std::sqrt(u.dot(qu));
      h += hi;
      hess += q / hi - (qu * qu.transpose()) / (hi * hi * hi);
    }
    acc += rule.weights[k] * h * hess.determinant();
  }
  return acc / N;
}

// Merges ellipsoids whose shapes are positive multiples of each other:
// E(Q) + E(a Q) = E((1 + sqrt a)^2 Q).
std::vector<Mat> merge_proportional(const std::vector<Mat>& shapes) {
  std::vector<Mat> out;
  for (const auto& q : shapes) {
    bool merged = false;
    for (auto& p : out) {
      const double tq = q.trace(), tp = p.trace();
      if (tq <= 0.0 || tp <= 0.0) continue;
      const double a = tq / tp;
      if ((q - a * p).cwiseAbs().maxCoeff() <= 1e-14 * q.cwiseAbs().maxCoeff()) {
        p *= (1.0 + std::sqrt(a)) * (1.0 + std::sqrt(a));
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(q);
  }
  return out;
}

double smooth_sum_volume(const std::vector<Mat>& shapes, int dim, const VolumeOptions& options) {
  const std::vector<Mat> merged = merge_proportional(shapes);
  if (merged.size() == 1) return ball_volume(dim) * std::sqrt(std::max(0.0, merged.front().determinant()));
  const int res = options.smooth_resolution > 0 ? options.smooth_resolution : default_smooth_resolution(dim);
  const SphereRule& rule = cached_sphere_rule(dim, res);
  switch (dim) {
    case 2: return smooth_sum_volume_fixed<2>(merged, rule);
    case 3: return smooth_sum_volume_fixed<3>(merged, rule);
    case 4: return smooth_sum_volume_fixed<4>(merged, rule);
    default: throw Error("bad-dimension", "smooth volume needs dimension 2..4");
  }
}

double analytic_volume(const CanonicalSum& body, const VolumeOptions& options) {
  const CanonicalSum s = body.normalized();
  const int n = s.dim;
  if (n == 0) return 1.0;
  if (!s.segments.empty()) {
    // vol(K + [-v, v]) = vol(K) + 2 |v| vol_{n-1}(projection of K onto v-perp)
    CanonicalSum rest = s;
    const Vec v = rest.segments.back();
    rest.segments.pop_back();
    const double base = analytic_volume(rest, options);
    return base + 2.0 * v.norm() * analytic_volume(rest.project(orthogonal_complement(v)), options);
  }
  if (s.ellipsoids.empty()) return 0.0;
  for (const auto& q : s.ellipsoids) {
    const SymmetricEigen eig = symmetric_eigen(q);
    if (eig.values(0) <= 1e-10 * eig.values(n - 1)) {
      if (s.ellipsoids.size() == 1) return 0.0;
      throw Error("analytic-unavailable",
                  "Minkowski sum with a flat (rank " + std::to_string(n - 1) + " or lower) ellipsoid");
    }
  }
  if (s.ellipsoids.size() == 1) return ball_volume(n) * std::sqrt(std::max(0.0, s.ellipsoids.front().determinant()));
  return smooth_sum_volume(s.ellipsoids, n, options);
}

double membership_volume(const CanonicalSum& body, bool monte_carlo, const VolumeOptions& options) {
  const int n = body.dim;
  if (n == 0) return 1.0;
  Vec half(n);
  for (int i = 0; i < n; ++i) half(i) = body.support(Vec::Unit(n, i));
  if (half.minCoeff() <= 0.0) return 0.0;
  const std::vector<Vec> dirs = direction_grid(n, options.directions);
  std::vector<double> h(dirs.size());
  for (std::size_t j = 0; j < dirs.size(); ++j) h[j] = body.support(dirs[j]);
  const auto inside = [&](const Vec& x) {
    for (std::size_t j = 0; j < dirs.size(); ++j) {
      if (x.dot(dirs[j]) > h[j]) return false;
    }
    return true;
  };
  const double box = (2.0 * half).prod();
  if (monte_carlo) {
    std::mt19937_64 rng(options.mc_seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    long hits = 0;
    Vec x(n);
    for (long s = 0; s < options.mc_samples; ++s) {
      for (int i = 0; i < n; ++i) x(i) = half(i) * unit(rng);
      if (inside(x)) ++hits;
    }
    return box * static_cast<double>(hits) / static_cast<double>(options.mc_samples);
  }
  const int res = options.grid_resolution > 0 ? options.grid_resolution : default_grid_resolution(n);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= res;
  long hits = 0;
  Vec x(n);
  for (long idx = 0; idx < total; ++idx) {
    long rem = idx;
    for (int i = 0; i < n; ++i) {
      const long c = rem % res;
      rem /= res;
      x(i) = half(i) * (-1.0 + (2.0 * c + 1.0) / res);
    }
    if (inside(x)) ++hits;
  }
  return box * static_cast<double>(hits) / static_cast<double>(total);
}

double volume_of(const CanonicalSum& body, VolumeMethod method, const VolumeOptions& options) {
  switch (method) {
    case VolumeMethod::Analytic: return analytic_volume(body, options);
    case VolumeMethod::MembershipGrid: return membership_volume(body, false, options);
    case VolumeMethod::MonteCarlo: return membership_volume(body, true, options);
  }
  return 0.0;
}

double volume_auto(const CanonicalSum& body, const VolumeOptions& options) {
  try {
    return analytic_volume(body, options);
  } catch (const Error& e) {
    if (e.code() != "analytic-unavailable") throw;
    return membership_volume(body, false, options);
  }
}

}  // namespace

std::vector<Vec> direction_grid(int dim, int count) {
  std::vector<Vec> dirs;
  switch (dim) {
    case 1:
      dirs = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
      break;
    case 2:
      for (int j = 0; j < count; ++j) {
        const double t = 2.0 * std::numbers::pi * j / count;
        Vec u(2);
        u << std::cos(t), std::sin(t);
        dirs.push_back(u);
      }
      break;
    case 3: {
      const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
      for (int j = 0; j < count; ++j) {
        const double z = 1.0 - (2.0 * j + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        Vec u(3);
        u << r * std::cos(golden * j), r * std::sin(golden * j), z;
        dirs.push_back(u);
      }
      break;
    }
    case 4: {
      std::mt19937_64 rng(0x5eedULL);
      std::normal_distribution<double> g;
      for (int j = 0; j < count; ++j) {
        Vec u(4);
        for (int i = 0; i < 4; ++i) u(i) = g(rng);
        dirs.push_back(u.normalized());
      }
      break;
    }
    default:
      throw Error("bad-dimension", "direction grids exist for dimensions 1..4");
  }
  return dirs;
}

double volume(const ConvexBody& body, VolumeMethod method, const VolumeOptions& options) {
  return volume_of(canonicalize(body), method, options);
}

double volume(const ConvexBody& body, const VolumeOptions& options) {
  return volume_auto(canonicalize(body), options);
}

double mixed_volume(std::span<const ConvexBody> bodies, const VolumeOptions& options) {
  const int n = static_cast<int>(bodies.size());
  if (n < 1) throw Error("dimension-mismatch", "mixed volume needs at least one body");
  std::vector<CanonicalSum> parts;
  for (const auto& b : bodies) {
    if (b.dim() != n) {
      throw Error("dimension-mismatch", "mixed volume of " + std::to_string(n) + " bodies needs bodies in R^" +
                                            std::to_string(n) + ", got R^" + std::to_string(b.dim()));
    }
    parts.push_back(canonicalize(b));
  }
  const auto polarize = [&](auto&& vol) {
    double acc = 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      CanonicalSum s;
      s.dim = n;
      int size = 0;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          s = s + parts[i];
          ++size;
        }
      }
      acc += ((n - size) % 2 == 0 ? 1.0 : -1.0) * vol(s);
    }
    return acc / factorial(n);
  };
  try {
    return polarize([&](const CanonicalSum& s) { return analytic_volume(s, options); });
  } catch (const Error& e) {
    if (e.code() != "analytic-unavailable") throw;
  }
  return polarize([&](const CanonicalSum& s) { return membership_volume(s, false, options); });
}

double projection_volume(const ConvexBody& body, const Mat& frame, const VolumeOptions& options) {
  if (frame.rows() != body.dim()) throw Error("dimension-mismatch", "frame rows must match body dimension");
  require_orthonormal(frame);
  if (frame.cols() == 0) return 1.0;
  return volume_auto(canonicalize(body).project(frame), options);
}

AlexandrovFenchelReport check_alexandrov_fenchel(std::span<const ConvexBody> bodies, double tol,
                                                 const VolumeOptions& options) {
  const auto n = bodies.size();
  if (n < 2) throw Error("bad-dimension", "Alexandrov-Fenchel needs at least two bodies");
  std::vector<ConvexBody> first(bodies.begin(), bodies.end());
  std::vector<ConvexBody> second = first;
  first[n - 1] = first[n - 2];
  second[n - 2] = second[n - 1];
  AlexandrovFenchelReport r;
  const double v = mixed_volume(bodies, options);
  r.lhs = v * v;
  r.rhs = mixed_volume(first, options) * mixed_volume(second, options);
  r.holds = r.lhs >= r.rhs - tol * (1.0 + r.rhs);
  return r;
}

bool support_dominates(const ConvexBody& outer, const ConvexBody& inner, int directions, double tol) {
  if (outer.dim() != inner.dim()) throw Error("dimension-mismatch", "bodies differ in dimension");
  for (const auto& u : direction_grid(outer.dim(), directions)) {
    if (inner.support(u) > outer.support(u) + tol) return false;
  }
  return true;
}

}  // namespace crofton
