#include "crofton/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "crofton/constants.hpp"
#include "crofton/cosine_transform.hpp"
#include "crofton/error.hpp"
#include "crofton/function_space.hpp"
#include "crofton/integral_identities.hpp"
#include "crofton/montecarlo.hpp"
#include "crofton/predictor.hpp"
#include "crofton/report.hpp"
#include "crofton/volume.hpp"

namespace crofton {

namespace {

const char* const kModes = "predict, simulate, compare, verify, transform";
const char* const kIdentities = "product, alesker, haar2, crofton-product, af, hodge, constants";

struct Outcome {
  nlohmann::json report;
  bool pass = true;
};

std::vector<FunctionSpace> spaces_of(const RunConfig& c, const Manifold& m) {
  if (c.spaces.empty()) throw Error("unknown-space", "no function spaces given; supported: " +
                                                         FunctionSpace::supported_descriptors());
  std::vector<FunctionSpace> out;
  for (std::size_t i = 0; i < c.spaces.size(); ++i) {
    out.push_back(orthonormalize(FunctionSpace::parse(m, c.spaces[i], static_cast<int>(i))));
  }
  if (static_cast<int>(out.size()) != m.dim()) {
    throw Error("dimension-mismatch", std::to_string(out.size()) + " spaces given for the " + std::to_string(m.dim()) +
                                          "-dimensional manifold " + m.name() + "; need exactly " +
                                          std::to_string(m.dim()));
  }
  return out;
}

Manifold manifold_of(const RunConfig& c) {
  if (c.manifold.empty()) throw Error("unknown-manifold", "no manifold given; supported: " + Manifold::supported_names());
  return Manifold::parse(c.manifold);
}

PredictOptions predict_options(const RunConfig& c) {
  PredictOptions o;
  o.resolution = c.quadrature;
  o.workers = c.workers;
  return o;
}

ZeroCountEstimate run_estimate(const RunConfig& c, std::span<const FunctionSpace> spaces) {
  EstimateOptions o;
  o.workers = c.workers;
  return estimate(spaces, c.samples > 0 ? c.samples : 300, c.seed, o);
}

void write_csv(const RunConfig& c, const ZeroCountEstimate& e) {
  if (c.csv.empty()) return;
  std::ofstream f(c.csv);
  if (!f) throw Error("bad-output", "cannot write '" + c.csv + "'");
  f << samples_csv(e);
}

Outcome verify(const RunConfig& c) {
  const double tol = c.tol;
  MonteCarloOptions mc;
  mc.samples = c.samples > 0 ? c.samples : 1000000;
  mc.seed = c.seed;
  mc.workers = c.workers;
  const std::string& id = c.identity;
  if (id == "product") {
    const std::vector<ConvexBody> bodies = parse_bodies(c.bodies);
    if (bodies.empty()) throw Error("bad-body", "no bodies given");
    const Region region = parse_region(c.region.empty() ? "unit-square" : c.region, bodies.front().dim());
    const IdentityReport r = verify_product_identity(bodies, region, tol > 0 ? tol : 0.02, mc, c.bandwidth);
    return {to_json(r), r.pass};
  }
  if (id == "alesker") {
    const std::vector<ConvexBody> bodies = parse_bodies(c.bodies);
    if (bodies.size() != 1) throw Error("bad-body", "alesker takes exactly one body");
    IdentityReport r = alesker_identity(bodies.front(), c.bandwidth);
    r.tol = tol > 0 ? tol : 1e-6;
    r.pass = r.relative_deviation() <= r.tol;
    return {to_json(r), r.pass};
  }
  if (id == "haar2") {
    const std::vector<ConvexBody> bodies = parse_bodies(c.bodies);
    if (bodies.size() != 1) throw Error("bad-body", "haar2 takes exactly one body");
    const int n = bodies.front().dim();
    const Mat d = c.subspace.empty() ? Mat(Mat::Identity(n, std::min(n, 2))) : parse_columns(c.subspace);
    IdentityReport r = haar2_check(bodies.front(), d, c.bandwidth);
    r.tol = tol > 0 ? tol : 1e-3;
    r.pass = r.relative_deviation() <= r.tol;
    return {to_json(r), r.pass};
  }
  if (id == "crofton-product") {
    std::vector<int> dims;
    for (double v : parse_numbers(c.tangent_dims)) dims.push_back(static_cast<int>(v));
    const IdentityReport r = verify_crofton_product(dims, parse_columns(c.theta), tol > 0 ? tol : 0.02, mc);
    return {to_json(r), r.pass};
  }
  if (id == "af") {
    const std::vector<ConvexBody> bodies = parse_bodies(c.bodies);
    const AlexandrovFenchelReport r = check_alexandrov_fenchel(bodies, tol > 0 ? tol : 1e-9);
    return {to_json(r), r.holds};
  }
  if (id == "hodge") {
    const Manifold m = manifold_of(c);
    const std::vector<FunctionSpace> spaces = spaces_of(c, m);
    const HodgeReport r = hodge_report(spaces, predict_options(c));
    return {to_json(r), r.pass};
  }
  if (id == "constants") {
    const int max_dim = c.dim > 0 ? c.dim : 6;
    const double t = tol > 0 ? tol : 1e-12;
    nlohmann::json rows = nlohmann::json::array();
    bool pass = true;
    for (int p = 1; p <= max_dim; ++p) {
      const DimensionalConstants k = DimensionalConstants::of(p);
      const double target = 2.0 * std::pow(2.0 * std::numbers::pi, p) / factorial(p);
      const double rel = std::abs(k.identity_residual()) / target;
      pass = pass && rel <= t;
      rows.push_back({{"p", p}, {"sigma_p", k.sigma_p}, {"v_p", k.v_p}, {"relative_residual", rel}});
    }
    return {{{"identity", "constants"}, {"rows", rows}, {"tol", t}, {"pass", pass}}, pass};
  }
  throw Error("unknown-identity", "unknown identity '" + id + "'; supported: " + kIdentities);
}

Outcome transform(const RunConfig& c) {
  const int dim = c.dim > 0 ? c.dim : 2;
  const std::vector<double> coeffs = parse_numbers(c.coefficients);
  int bandwidth = 0;
  if (dim == 2) {
    if (coeffs.empty() || coeffs.size() % 2 == 0) {
      throw Error("bad-coefficients", "dim 2 needs 2L+1 coefficients a0, a1, b1, ..., aL, bL");
    }
    bandwidth = static_cast<int>(coeffs.size() - 1) / 2;
  } else if (dim == 3) {
    const int l = static_cast<int>(std::lround(std::sqrt(static_cast<double>(coeffs.size())))) - 1;
    if (l < 0 || (l + 1) * (l + 1) != static_cast<int>(coeffs.size())) {
      throw Error("bad-coefficients", "dim 3 needs (L+1)^2 spherical-harmonic coefficients");
    }
    bandwidth = l;
  } else if (dim == 1) {
    if (coeffs.size() != 1) throw Error("bad-coefficients", "dim 1 takes one coefficient");
  } else {
    throw Error("bad-dimension", "transform supports dim 1, 2, 3");
  }
  HarmonicGauge g = HarmonicGauge::zero(dim, bandwidth);
  g.coeffs = coeffs;
  const HarmonicGauge out = c.invert ? inverse_cosine_transform(g) : cosine_transform(g);
  return {{{"dim", dim}, {"bandwidth", bandwidth}, {"inverse", c.invert}, {"coefficients", out.coeffs}}, true};
}

Outcome dispatch(const RunConfig& c) {
  if (c.mode == "predict") {
    const Manifold m = manifold_of(c);
    const std::vector<FunctionSpace> spaces = spaces_of(c, m);
    return {to_json(predict(spaces, predict_options(c))), true};
  }
  if (c.mode == "simulate") {
    const Manifold m = manifold_of(c);
    const std::vector<FunctionSpace> spaces = spaces_of(c, m);
    const ZeroCountEstimate e = run_estimate(c, spaces);
    write_csv(c, e);
    return {to_json(e), true};
  }
  if (c.mode == "compare") {
    const Manifold m = manifold_of(c);
    const std::vector<FunctionSpace> spaces = spaces_of(c, m);
    const Prediction p = predict(spaces, predict_options(c));
    const ZeroCountEstimate e = run_estimate(c, spaces);
    write_csv(c, e);
    const CompareVerdict v = report_compare(p, e, c.tol > 0 ? c.tol : 1e-9);
    nlohmann::json j = to_json(v);
    j["prediction"] = to_json(p);
    j["estimate"] = to_json(e);
    return {j, v.pass};
  }
  if (c.mode == "verify") return verify(c);
  if (c.mode == "transform") return transform(c);
  throw Error("unknown-mode", "unknown mode '" + c.mode + "'; supported: " + kModes);
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Outcome o = dispatch(config);
    o.report["mode"] = config.mode;
    o.report["timestamp"] = timestamp_now();
    const std::string text = o.report.dump(2);
    out << text << "\n";
    if (!config.report.empty()) {
      std::ofstream f(config.report);
      if (!f) throw Error("bad-output", "cannot write '" + config.report + "'");
      f << text << "\n";
    }
    return o.pass ? kExitPass : kExitIdentityFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Average zero counts of random functions and integral-geometry identity checks", "crofton"};
  app.require_subcommand(1);

  RunConfig flags;
  std::string config_path;
  double samples = 0.0;
  std::string spaces;
  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> bound;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "INI run configuration; flags override it");
    bound.push_back({sub->add_option("--samples", samples, "Monte Carlo sample count (accepts 1e6)"),
                     [&](RunConfig& c) { c.samples = static_cast<long>(std::llround(samples)); }});
    bound.push_back({sub->add_option("--seed", flags.seed, "random seed"), [&](RunConfig& c) { c.seed = flags.seed; }});
    bound.push_back({sub->add_option("--tol", flags.tol, "tolerance"), [&](RunConfig& c) { c.tol = flags.tol; }});
    bound.push_back({sub->add_option("--workers", flags.workers, "worker threads (default: CROFTON_WORKERS or all cores)"),
                     [&](RunConfig& c) { c.workers = flags.workers; }});
    bound.push_back({sub->add_option("--quadrature", flags.quadrature, "manifold quadrature resolution"),
                     [&](RunConfig& c) { c.quadrature = flags.quadrature; }});
    bound.push_back({sub->add_option("--bandwidth", flags.bandwidth, "harmonic bandwidth"),
                     [&](RunConfig& c) { c.bandwidth = flags.bandwidth; }});
    bound.push_back({sub->add_option("--report", flags.report, "write the JSON report to this file"),
                     [&](RunConfig& c) { c.report = flags.report; }});
  };
  const auto add_spaces = [&](CLI::App* sub) {
    bound.push_back({sub->add_option("--manifold", flags.manifold, Manifold::supported_names()),
                     [&](RunConfig& c) { c.manifold = flags.manifold; }});
    bound.push_back({sub->add_option("--spaces", spaces, "comma-separated: " + FunctionSpace::supported_descriptors()),
                     [&](RunConfig& c) { c.spaces = split_list(spaces, ','); }});
  };

  CLI::App* predict_cmd = app.add_subcommand("predict", "predicted average number of common zeros");
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo zero counts");
  CLI::App* compare_cmd = app.add_subcommand("compare", "prediction against Monte Carlo (3 stderr)");
  CLI::App* verify_cmd = app.add_subcommand("verify", "numerical identity checks");
  CLI::App* transform_cmd = app.add_subcommand("transform", "cosine transform of harmonic coefficients");
  for (CLI::App* sub : {predict_cmd, simulate_cmd, compare_cmd, verify_cmd, transform_cmd}) add_common(sub);
  for (CLI::App* sub : {predict_cmd, simulate_cmd, compare_cmd, verify_cmd}) add_spaces(sub);
  for (CLI::App* sub : {simulate_cmd, compare_cmd}) {
    bound.push_back({sub->add_option("--csv", flags.csv, "per-sample CSV output"),
                     [&](RunConfig& c) { c.csv = flags.csv; }});
  }
  bound.push_back({verify_cmd->add_option("--identity", flags.identity, kIdentities),
                   [&](RunConfig& c) { c.identity = flags.identity; }});
  bound.push_back({verify_cmd->add_option("--bodies", flags.bodies, "comma-separated bodies"),
                   [&](RunConfig& c) { c.bodies = flags.bodies; }});
  bound.push_back({verify_cmd->add_option("--region", flags.region, "unit-square, unit-cube, segment[L], parallelotope[..]"),
                   [&](RunConfig& c) { c.region = flags.region; }});
  bound.push_back({verify_cmd->add_option("--tangent-dims", flags.tangent_dims, "sphere dimensions, e.g. 2,2"),
                   [&](RunConfig& c) { c.tangent_dims = flags.tangent_dims; }});
  bound.push_back({verify_cmd->add_option("--theta", flags.theta, "parallelotope edges, ';'-separated"),
                   [&](RunConfig& c) { c.theta = flags.theta; }});
  bound.push_back({verify_cmd->add_option("--subspace", flags.subspace, "orthonormal basis, ';'-separated"),
                   [&](RunConfig& c) { c.subspace = flags.subspace; }});
  bound.push_back({verify_cmd->add_option("--max-dim", flags.dim, "largest dimension for the constants check"),
                   [&](RunConfig& c) { c.dim = flags.dim; }});
  bound.push_back({transform_cmd->add_option("--dim", flags.dim, "dimension of V (1, 2, 3)"),
                   [&](RunConfig& c) { c.dim = flags.dim; }});
  bound.push_back({transform_cmd->add_option("--coefficients", flags.coefficients, "comma-separated coefficients"),
                   [&](RunConfig& c) { c.coefficients = flags.coefficients; }});
  bound.push_back({transform_cmd->add_flag("--invert", flags.invert, "apply the inverse transform"),
                   [&](RunConfig& c) { c.invert = flags.invert; }});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  config.mode = app.get_subcommands().front()->get_name();
  for (const auto& [opt, apply] : bound) {
    if (opt->count() > 0) apply(config);
  }
  return execute(config, out, err);
}

}  // namespace crofton
