#include "crofton/density_product.hpp"

#include <cmath>
#include <random>

#include "crofton/constants.hpp"
#include "crofton/error.hpp"
#include "crofton/parallel.hpp"

namespace crofton {

namespace {

constexpr long kBlock = 65536;

struct Partial {
  double sum = 0.0;
  double sumsq = 0.0;
  long singular = 0;
};

}  // namespace

double IdentityReport::relative_deviation() const {
  const double diff = std::abs(lhs - rhs);
  if (rhs == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
  return diff / std::abs(rhs);
}

Region Region::parallelotope(Vec origin, Mat edges) {
  if (origin.size() != edges.rows()) throw Error("dimension-mismatch", "region origin and edges differ in dimension");
  if (edges.cols() == 0) throw Error("empty-region", "region needs at least one edge");
  if (edges.cols() > edges.rows()) throw Error("dimension-mismatch", "more edges than ambient dimensions");
  return Region{std::move(origin), std::move(edges)};
}

Region Region::unit_cube(int n) {
  return parallelotope(Vec::Constant(n, -0.5), Mat::Identity(n, n));
}

double Region::volume() const { return std::sqrt(std::max(0.0, (edges.transpose() * edges).determinant())); }

Vec Region::center() const { return origin + 0.5 * edges.rowwise().sum(); }

double Region::radius() const {
  const int k = dim();
  double r = 0.0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Vec offset = Vec::Zero(ambient_dim());
    for (int j = 0; j < k; ++j) offset += ((mask >> j) & 1u ? 0.5 : -0.5) * edges.col(j);
    r = std::max(r, offset.norm());
  }
  return r;
}

Mat Region::frame() const { return edges.householderQr().householderQ() * Mat::Identity(ambient_dim(), dim()); }

ProductEstimate density_product_mc(std::span<const NormalMeasure1> factors, const Region& region,
                                   const MonteCarloOptions& options) {
  const int k = region.dim();
  const int n = region.ambient_dim();
  if (k == 0) throw Error("empty-region", "region has no edges");
  if (static_cast<int>(factors.size()) != k) {
    throw Error("dimension-mismatch", std::to_string(factors.size()) + " factors for a " + std::to_string(k) +
                                          "-dimensional region");
  }
  for (const auto& f : factors) {
    if (f.ambient_dim() != n) throw Error("dimension-mismatch", "factor measure lives in the wrong space");
  }
  if (options.samples < 1) throw Error("bad-samples", "sample count must be positive");
  ProductEstimate est;
  est.samples = options.samples;
  const double scale = region.edges.cwiseAbs().maxCoeff();
  if (region.volume() <= 1e-12 * std::pow(std::max(scale, 1e-300), k)) return est;

  const Vec c = region.center();
  const double r = region.radius();
  const long blocks = (options.samples + kBlock - 1) / kBlock;
  std::vector<Partial> partials(static_cast<std::size_t>(blocks));
  parallel_for(
      static_cast<std::size_t>(blocks),
      [&](std::size_t b) {
        std::mt19937_64 rng(stream_seed(options.seed, b));
        std::uniform_real_distribution<double> offset(-1.0, 1.0);
        const long begin = static_cast<long>(b) * kBlock;
        const long end = std::min(options.samples, begin + kBlock);
        Partial p;
        Mat m(k, k);
        Vec rhs(k);
        for (long s = begin; s < end; ++s) {
          double weight = 1.0;
          for (int j = 0; j < k; ++j) {
            const NormalMeasure1::Draw d = factors[j].draw(rng);
            const double t = d.normal.dot(c) + r * offset(rng);
            weight *= d.weight * 2.0 * r;
            m.row(j) = (d.normal.transpose() * region.edges);
            rhs(j) = t - d.normal.dot(region.origin);
          }
          if (weight == 0.0) continue;
          Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
          const Vec sv = svd.singularValues();
          if (sv(k - 1) <= 1e-12 * sv(0)) {
            ++p.singular;
            continue;
          }
          const Vec a = svd.solve(rhs);
          if ((a.array() >= 0.0).all() && (a.array() <= 1.0).all()) {
            p.sum += weight;
            p.sumsq += weight * weight;
          }
        }
        partials[b] = p;
      },
      options.workers);

  double sum = 0.0, sumsq = 0.0;
  for (const auto& p : partials) {
    sum += p.sum;
    sumsq += p.sumsq;
    est.singular += p.singular;
  }
  const double nsamp = static_cast<double>(options.samples);
  est.value = sum / nsamp;
  const double var = std::max(0.0, sumsq / nsamp - est.value * est.value);
  est.stderr_ = options.samples > 1 ? std::sqrt(var * nsamp / (nsamp - 1.0) / nsamp) : 0.0;
  return est;
}

IdentityReport verify_product_identity(std::span<const ConvexBody> bodies, const Region& region, double tol,
                                       const MonteCarloOptions& options, int bandwidth) {
  const int k = static_cast<int>(bodies.size());
  if (k != region.dim()) {
    throw Error("dimension-mismatch", std::to_string(k) + " bodies for a " + std::to_string(region.dim()) +
                                          "-dimensional region");
  }
  IdentityReport report;
  report.identity = "product";
  report.tol = tol;
  const double vol = region.volume();
  const Mat frame = region.frame();
  report.rhs = vol > 0.0 ? factorial(k) * dk_mixed({bodies.begin(), bodies.end()}).gauge(frame) * vol : 0.0;
  if (k == 1) {
    report.lhs = NormalMeasure1::of_body(bodies.front(), bandwidth).chi(region.edges.col(0));
  } else {
    std::vector<NormalMeasure1> factors;
    for (const auto& b : bodies) factors.push_back(NormalMeasure1::of_body(b, bandwidth));
    const ProductEstimate est = density_product_mc(factors, region, options);
    report.lhs = est.value;
    report.stderr_ = est.stderr_;
    report.samples = est.samples;
  }
  report.pass = std::abs(report.lhs - report.rhs) <= tol * std::abs(report.rhs) + 1e-12;
  return report;
}

}  // namespace crofton
