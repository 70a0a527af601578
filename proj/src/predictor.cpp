#include "crofton/predictor.hpp"

#include <cmath>
#include <numbers>

#include "crofton/constants.hpp"
#include "crofton/error.hpp"
#include "crofton/parallel.hpp"
#include "crofton/point_geometry.hpp"

namespace crofton {

namespace {

void require_spaces(std::span<const FunctionSpace> spaces) {
  if (spaces.empty()) throw Error("dimension-mismatch", "no function spaces given");
  const Manifold& m = spaces.front().manifold();
  if (static_cast<int>(spaces.size()) != m.dim()) {
    throw Error("dimension-mismatch", std::to_string(spaces.size()) + " spaces on the " + std::to_string(m.dim()) +
                                          "-dimensional manifold " + m.name() + "; need one per dimension");
  }
  for (const auto& s : spaces) {
    if (s.manifold().factors() != m.factors()) throw Error("dimension-mismatch", "spaces live on different manifolds");
  }
}

// Pull-back metrics of every space at every quadrature node.
struct NodeMetrics {
  Manifold::Quadrature quadrature;
  std::vector<std::vector<Mat>> metric;  // [node][space]
};

NodeMetrics node_metrics(std::span<const FunctionSpace> spaces, const PredictOptions& options) {
  NodeMetrics nm;
  const Manifold& m = spaces.front().manifold();
  nm.quadrature = m.quadrature(options.resolution);
  nm.metric.resize(nm.quadrature.points.size());
  parallel_for(
      nm.quadrature.points.size(),
      [&](std::size_t i) {
        const Vec& x = nm.quadrature.points[i];
        const Mat frame = m.tangent_frame(x);
        for (const auto& s : spaces) nm.metric[i].push_back(pullback_metric(s, x, frame));
      },
      options.workers);
  return nm;
}

double node_mixed_volume(const std::vector<Mat>& metrics, std::span<const int> slots, const VolumeOptions& vol) {
  if (slots.size() == 1) return 2.0 * std::sqrt(std::max(0.0, metrics[slots[0]](0, 0)));
  std::vector<ConvexBody> bodies;
  for (int s : slots) bodies.push_back(ConvexBody::ellipsoid(metrics[s]));
  return mixed_volume(bodies, vol);
}

// n!/(2 pi)^n sum_x w(x) V_n(E_{slots_1}(x), ...).
double integrate(const NodeMetrics& nm, std::span<const int> slots, const PredictOptions& options,
                 std::vector<double>* per_node) {
  const std::size_t count = nm.quadrature.points.size();
  std::vector<double> v(count);
  parallel_for(
      count, [&](std::size_t i) { v[i] = node_mixed_volume(nm.metric[i], slots, options.volume); }, options.workers);
  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += nm.quadrature.weights[i] * v[i];
  const int n = static_cast<int>(slots.size());
  if (per_node) *per_node = std::move(v);
  return factorial(n) / std::pow(2.0 * std::numbers::pi, n) * acc;
}

std::vector<int> identity_slots(int n) {
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

}  // namespace

Prediction predict(std::span<const FunctionSpace> spaces, const PredictOptions& options) {
  require_spaces(spaces);
  const NodeMetrics nm = node_metrics(spaces, options);
  Prediction p;
  p.nodes = static_cast<long>(nm.quadrature.points.size());
  p.value = integrate(nm, identity_slots(static_cast<int>(spaces.size())), options, &p.node_mixed_volume);
  p.inputs = spaces.front().manifold().name() + ":";
  for (std::size_t i = 0; i < spaces.size(); ++i) p.inputs += (i ? ", " : " ") + spaces[i].label();
  return p;
}

double gichev_closed_form(std::span<const double> lambdas, int n, double vol) {
  if (n < 1 || static_cast<int>(lambdas.size()) != n) {
    throw Error("bad-eigenvalue", "need exactly n = " + std::to_string(n) + " eigenvalues");
  }
  double prod = 1.0;
  for (double l : lambdas) {
    if (!(l > 0.0)) throw Error("bad-eigenvalue", "eigenvalues must be positive");
    prod *= l;
  }
  return 2.0 / (sphere_volume(n) * std::pow(n, 0.5 * n)) * std::sqrt(prod) * vol;
}

double upper_bound(double lambda, int n, double vol) {
  if (!(lambda > 0.0)) throw Error("bad-eigenvalue", "eigenvalue must be positive");
  if (n < 1) throw Error("bad-dimension", "dimension must be positive");
  return 2.0 / (sphere_volume(n) * std::pow(n, 0.5 * n)) * std::pow(lambda, 0.5 * n) * vol;
}

bool is_invariant(const FunctionSpace& space, int resolution, double tol) {
  const Manifold& m = space.manifold();
  const Manifold::Quadrature q = m.quadrature(resolution);
  Vec first;
  for (const auto& x : q.points) {
    const Vec ev = symmetric_eigen(pullback_metric(space, x)).values;
    if (first.size() == 0) {
      first = ev;
      continue;
    }
    const double scale = std::max(1.0, first.cwiseAbs().maxCoeff());
    if ((ev - first).cwiseAbs().maxCoeff() > tol * scale) return false;
  }
  return true;
}

HodgeReport hodge_report(std::span<const FunctionSpace> spaces, const PredictOptions& options) {
  require_spaces(spaces);
  const int n = static_cast<int>(spaces.size());
  if (n < 2) throw Error("bad-dimension", "Hodge inequalities need n >= 2");
  const NodeMetrics nm = node_metrics(spaces, options);
  const auto m_of = [&](std::vector<int> slots) { return integrate(nm, slots, options, nullptr); };

  HodgeReport r;
  r.invariant = true;
  for (const auto& s : spaces) r.invariant = r.invariant && is_invariant(s, options.resolution);
  const Manifold& man = spaces.front().manifold();
  r.equality_expected = man.factor_count() == 1 && man.factors()[0] == 2;

  std::vector<int> slots = identity_slots(n);
  const double full = m_of(slots);
  r.lhs = full * full;
  std::vector<int> a = slots, b = slots;
  a[n - 1] = n - 2;
  b[n - 2] = n - 1;
  r.rhs = m_of(a) * m_of(b);
  r.holds = r.lhs >= r.rhs - 1e-8 * (1.0 + r.rhs);

  r.corollary_lhs = std::pow(full, n);
  r.corollary_rhs = 1.0;
  for (int i = 0; i < n; ++i) r.corollary_rhs *= m_of(std::vector<int>(n, i));
  r.corollary_holds = r.corollary_lhs >= r.corollary_rhs - 1e-8 * (1.0 + r.corollary_rhs);

  r.equality = std::abs(r.lhs - r.rhs) <= 1e-6 * std::max(1.0, r.rhs) &&
               std::abs(r.corollary_lhs - r.corollary_rhs) <= 1e-6 * std::max(1.0, r.corollary_rhs);
  if (!r.invariant) {
    r.advisory = "not-invariant";
    r.pass = true;
  } else {
    r.pass = r.holds && r.corollary_holds && (!r.equality_expected || r.equality);
  }
  return r;
}

}  // namespace crofton
