#include "crofton/integral_identities.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "crofton/constants.hpp"
#include "crofton/cosine_transform.hpp"
#include "crofton/error.hpp"
#include "crofton/parallel.hpp"
#include "crofton/quadrature.hpp"
#include "crofton/volume.hpp"

namespace crofton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kBlock = 65536;

void require_smooth(const ConvexBody& body) {
  const CanonicalSum canon = canonicalize(body).normalized();
  bool smooth = canon.segments.empty() && !canon.ellipsoids.empty();
  for (const auto& q : canon.ellipsoids) {
    const SymmetricEigen eig = symmetric_eigen(q);
    if (eig.values(0) <= 1e-10 * eig.values(eig.values.size() - 1)) smooth = false;
  }
  if (!smooth) throw Error("not-smooth", "identity needs a smooth body (sum of positive-definite ellipsoids)");
}

// Trapezoid on S^1 or product Gauss-Legendre x trapezoid on S^2.
SphereRule identity_rule(int n, int bandwidth) {
  return n == 2 ? sphere_rule(2, 8 * bandwidth + 64) : sphere_rule(3, 2 * bandwidth + 8);
}

Mat block_embedding(std::span<const int> dims, std::size_t j) {
  int total = 0, offset = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i == j) offset = total;
    total += dims[i];
  }
  Mat e = Mat::Zero(total, dims[j]);
  e.block(offset, 0, dims[j], dims[j]).setIdentity();
  return e;
}

}  // namespace

IdentityReport alesker_identity(const ConvexBody& body, int bandwidth) {
  const int n = body.dim();
  if (n != 2 && n != 3) throw Error("bad-dimension", "the sphere identity is implemented in R^2 and R^3");
  require_smooth(body);
  const int bw = bandwidth > 0 ? bandwidth : default_bandwidth(n);
  const HarmonicGauge pre = inverse_cosine_transform(project([&](const Vec& u) { return body.support(u); }, n, bw));
  const double sigma = sphere_volume(n - 1);
  const SphereRule rule = identity_rule(n, bw);
  double lhs = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Vec& x = rule.nodes[i];
    lhs += rule.weights[i] * pre(x) / sigma * projection_volume(body, orthogonal_complement(x));
  }
  IdentityReport r;
  r.identity = "alesker";
  r.lhs = lhs;
  r.rhs = 0.5 * n * volume(body);
  r.pass = true;
  return r;
}

double alesker_identity_residual(const ConvexBody& body, int bandwidth) {
  return alesker_identity(body, bandwidth).relative_deviation();
}

IdentityReport haar2_check(const ConvexBody& body, const Mat& d, int bandwidth) {
  const int n = body.dim();
  const int k = static_cast<int>(d.cols());
  if (d.rows() != n) throw Error("dimension-mismatch", "subspace basis lives in the wrong space");
  require_orthonormal(d);
  const bool full = k == n && (n == 2 || n == 3);
  if (!full && !(n == 3 && k == 2)) {
    throw Error("bad-dimension", "implemented for k = 2 in R^3 and for D = V in R^2, R^3");
  }
  require_smooth(body);
  const int bw = bandwidth > 0 ? bandwidth : default_bandwidth(n);
  const HarmonicGauge pre =
      inverse_cosine_transform(project([&](const Vec& u) { return 2.0 * body.support(u); }, n, bw));
  IdentityReport r;
  r.identity = "haar2";
  r.pass = true;
  if (full) {
    // D = V: cos(H, D) = 1 and H-perp cap D = H-perp.
    const SphereRule rule = identity_rule(n, bw);
    double lhs = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const Vec& x = rule.nodes[i];
      lhs += rule.weights[i] * pre(x) * projection_volume(body, orthogonal_complement(x));
    }
    r.lhs = lhs / sphere_volume(n - 1);
    r.rhs = n * volume(body);
    return r;
  }
  const Vec normal = orthogonal_complement(Mat(d)).col(0);
  const SphereRule rule = polar_angle_rule(2 * bw + 16, normal);
  double lhs = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Vec& x = rule.nodes[i];
    const Vec along = Eigen::Vector3d(normal).cross(Eigen::Vector3d(x));
    const double s = along.norm();
    if (s == 0.0) continue;
    lhs += rule.weights[i] * pre(x) * s * 2.0 * body.support(along / s);
  }
  r.lhs = lhs / sphere_volume(2);
  r.rhs = k * projection_volume(body, d);
  return r;
}

ProductEstimate omega_mc(std::span<const int> tangent_dims, const Mat& theta, const MonteCarloOptions& options) {
  const int n = static_cast<int>(tangent_dims.size());
  int total = 0;
  for (int m : tangent_dims) {
    if (m < 1) throw Error("bad-dimension", "sphere dimensions must be positive");
    total += m;
  }
  if (n == 0) throw Error("empty-region", "no sphere factors");
  if (theta.rows() != total || theta.cols() != n) {
    throw Error("dimension-mismatch", "theta must be " + std::to_string(total) + " x " + std::to_string(n));
  }
  if (options.samples < 1) throw Error("bad-samples", "sample count must be positive");
  ProductEstimate est;
  est.samples = options.samples;
  const double gram = (theta.transpose() * theta).determinant();
  const double scale = std::max(theta.cwiseAbs().maxCoeff(), 1e-300);
  if (gram <= 1e-24 * std::pow(scale, 2 * n)) return est;

  double constant = 1.0;
  std::vector<int> offsets;
  int off = 0;
  for (int m : tangent_dims) {
    constant *= sphere_volume(m - 1) / sphere_volume(m);
    offsets.push_back(off);
    off += m;
  }
  const long blocks = (options.samples + kBlock - 1) / kBlock;
  std::vector<std::pair<double, double>> partials(static_cast<std::size_t>(blocks));
  parallel_for(
      static_cast<std::size_t>(blocks),
      [&](std::size_t b) {
        std::mt19937_64 rng(stream_seed(options.seed, b));
        std::normal_distribution<double> gauss;
        const long begin = static_cast<long>(b) * kBlock;
        const long end = std::min(options.samples, begin + kBlock);
        double sum = 0.0, sumsq = 0.0;
        Mat a(n, n);
        for (long s = begin; s < end; ++s) {
          for (int j = 0; j < n; ++j) {
            const int m = tangent_dims[j];
            Vec w(m);
            for (int i = 0; i < m; ++i) w(i) = gauss(rng);
            w /= w.norm();
            for (int i = 0; i < n; ++i) a(i, j) = theta.col(i).segment(offsets[j], m).dot(w);
          }
          const double v = std::abs(a.determinant());
          sum += v;
          sumsq += v * v;
        }
        partials[b] = {sum, sumsq};
      },
      options.workers);
  double sum = 0.0, sumsq = 0.0;
  for (const auto& [s, q] : partials) {
    sum += s;
    sumsq += q;
  }
  const double ns = static_cast<double>(options.samples);
  const double mean = sum / ns;
  const double var = std::max(0.0, sumsq / ns - mean * mean);
  est.value = constant * mean;
  est.stderr_ = options.samples > 1 ? constant * std::sqrt(var / (ns - 1.0)) : 0.0;
  return est;
}

IdentityReport verify_crofton_product(std::span<const int> tangent_dims, const Mat& theta, double tol,
                                      const MonteCarloOptions& options) {
  const int n = static_cast<int>(tangent_dims.size());
  const ProductEstimate omega = omega_mc(tangent_dims, theta, options);
  std::vector<NormalMeasure1> factors;
  for (int j = 0; j < n; ++j) {
    const int m = tangent_dims[j];
    if (m > 3) throw Error("bad-dimension", "length densities are implemented for spheres of dimension <= 3");
    const HarmonicGauge length = inverse_cosine_transform(HarmonicGauge::constant(m, 1.0));
    factors.push_back(NormalMeasure1::continuous(length).embedded(block_embedding(tangent_dims, j)));
  }
  MonteCarloOptions product_options = options;
  product_options.seed = stream_seed(options.seed, 0x70726f64ULL);
  const ProductEstimate product =
      density_product_mc(factors, Region::parallelotope(Vec::Zero(theta.rows()), theta), product_options);
  const double scale = 1.0 / std::pow(kPi, n);
  IdentityReport r;
  r.identity = "crofton-product";
  r.lhs = omega.value;
  r.rhs = scale * product.value;
  r.stderr_ = std::hypot(omega.stderr_, scale * product.stderr_);
  r.samples = options.samples;
  r.tol = tol;
  r.pass = std::abs(r.lhs - r.rhs) <= tol * std::abs(r.rhs) + 1e-15;
  return r;
}

}  // namespace crofton
