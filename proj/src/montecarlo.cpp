#include "crofton/montecarlo.hpp"

#include <cmath>
#include <numbers>

#include "crofton/error.hpp"
#include "crofton/parallel.hpp"

namespace crofton {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTangentTol = 1e-9;
constexpr double kRootTol = 1e-10;
constexpr double kMaxCondition = 1e8;
constexpr double kDedup = 1e-6;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const std::function<double(double)>& f, double a, double b, double fa) {
  for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (sign_of(fm) == sign_of(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double golden_min_abs(const std::function<double(double)>& f, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = std::abs(f(c)), fd = std::abs(f(d));
  for (int it = 0; it < 100 && b - a > 1e-13; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = std::abs(f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = std::abs(f(d));
    }
  }
  return std::min(fc, fd);
}

struct Grid2d {
  int rows = 0;  // cell rows
  int cols = 0;
  bool sphere = false;
  int node_rows() const { return sphere ? rows + 1 : rows; }
  int node_count() const { return node_rows() * cols; }
  Vec chart(double i, double j) const {
    Vec c(2);
    c << (sphere ? kPi * i / rows : 2.0 * kPi * i / rows), 2.0 * kPi * j / cols;
    return c;
  }
  int node(int i, int j) const {
    if (!sphere) i %= rows;
    return i * cols + (j % cols);
  }
};

Grid2d make_grid(const Manifold& m, int rows, int cols) {
  Grid2d g;
  g.sphere = !m.is_torus();
  g.rows = rows > 0 ? rows : (g.sphere ? 192 : 256);
  g.cols = cols > 0 ? cols : (g.sphere ? 384 : 256);
  return g;
}

std::vector<Vec> grid_points(const Manifold& m, const Grid2d& g) {
  std::vector<Vec> pts(g.node_count());
  for (int i = 0; i < g.node_rows(); ++i) {
    for (int j = 0; j < g.cols; ++j) pts[g.node(i, j)] = m.embed(g.chart(i, j));
  }
  return pts;
}

enum class NewtonResult { Root, Degenerate, Failed };

NewtonResult newton(const FieldPair& field, const Manifold& m, Vec& x, int max_iters) {
  Eigen::Vector2d f;
  Mat grad;
  Eigen::Matrix2d j;
  for (int it = 0; it <= max_iters; ++it) {
    field(x, f, grad);
    const Mat frame = m.tangent_frame(x);
    j = grad * frame;
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(j, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(1e-12);
    const Eigen::Vector2d sv = svd.singularValues();
    const double residual = f.cwiseAbs().maxCoeff();
    if (residual < kRootTol) {
      if (sv(1) == 0.0 || sv(0) / sv(1) >= kMaxCondition) return NewtonResult::Degenerate;
      // one more step for accuracy when cheap
      if (residual < 1e-14) return NewtonResult::Root;
    }
    if (sv(0) == 0.0) return NewtonResult::Failed;
    if (it == max_iters) break;
    Eigen::Vector2d step = -svd.solve(f);
    const double len = step.norm();
    if (len > 0.5) step *= 0.5 / len;
    x = m.retract(x + frame * step);
    if (len < 1e-15) break;
  }
  field(x, f, grad);
  if (f.cwiseAbs().maxCoeff() >= kRootTol) return NewtonResult::Failed;
  const Eigen::Matrix2d jj = grad * m.tangent_frame(x);
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(jj);
  const Eigen::Vector2d sv = svd.singularValues();
  if (sv(1) == 0.0 || sv(0) / sv(1) >= kMaxCondition) return NewtonResult::Degenerate;
  return NewtonResult::Root;
}

ZeroCount count_on_grid(const FieldPair& field, const Manifold& m, const Grid2d& g, const std::vector<double>& v1,
                        const std::vector<double>& v2, const std::vector<Vec>& points, int max_iters) {
  ZeroCount zc;
  const auto mixed = [&](const std::vector<double>& v, int a, int b, int c, int d) {
    const int s = sign_of(v[a]) + sign_of(v[b]) + sign_of(v[c]) + sign_of(v[d]);
    return std::abs(s) < 4 || v[a] == 0.0;
  };
  for (int i = 0; i < g.rows; ++i) {
    for (int jc = 0; jc < g.cols; ++jc) {
      const int a = g.node(i, jc), b = g.node(i + 1, jc), c = g.node(i, jc + 1), d = g.node(i + 1, jc + 1);
      if (!mixed(v1, a, b, c, d) || !mixed(v2, a, b, c, d)) continue;
      Vec x = m.retract(points[a] + points[b] + points[c] + points[d]);
      const NewtonResult r = newton(field, m, x, max_iters);
      if (r == NewtonResult::Failed) continue;
      if (r == NewtonResult::Degenerate) {
        zc.suspect = true;
        continue;
      }
      bool duplicate = false;
      for (const auto& y : zc.roots) {
        if ((y - x).norm() < kDedup) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) zc.roots.push_back(x);
    }
  }
  zc.count = static_cast<int>(zc.roots.size());
  return zc;
}

ZeroCount count_2d_with_values(const FieldPair& field, const Manifold& m, const Grid2d& coarse,
                               const std::vector<Vec>& coarse_pts, const std::vector<double>& c1,
                               const std::vector<double>& c2, const Grid2d* fine, const std::vector<Vec>* fine_pts,
                               const std::vector<double>* f1, const std::vector<double>* f2, int max_iters) {
  ZeroCount zc = count_on_grid(field, m, coarse, c1, c2, coarse_pts, max_iters);
  if (fine) {
    const ZeroCount again = count_on_grid(field, m, *fine, *f1, *f2, *fine_pts, max_iters);
    if (again.count != zc.count || again.suspect) zc.suspect = true;
  }
  return zc;
}

void require_2d(const Manifold& m) {
  const bool torus2 = m.is_torus() && m.dim() == 2;
  const bool s2 = m.factor_count() == 1 && m.factors()[0] == 2;
  if (!torus2 && !s2) throw Error("unsupported-manifold", "2d zero counting supports torus2 and s2, not " + m.name());
}

}  // namespace

Vec sample_unit(int m, std::mt19937_64& rng) {
  if (m < 1) throw Error("bad-dimension", "sphere dimension must be positive");
  std::normal_distribution<double> g;
  Vec v(m);
  double n = 0.0;
  while (n == 0.0) {
    for (int i = 0; i < m; ++i) v(i) = g(rng);
    n = v.norm();
  }
  return v / n;
}

ZeroCount count_zeros_1d(const Vec& values, const std::function<double(double)>& f) {
  const auto n = static_cast<int>(values.size());
  if (n < 4) throw Error("bad-resolution", "1d grid needs at least 4 points");
  const double h = 2.0 * kPi / n;
  ZeroCount zc;
  for (int i = 0; i < n; ++i) {
    const double a = values(i), b = values((i + 1) % n);
    const int sa = sign_of(a), sb = sign_of(b);
    if (sa == 0) {
      zc.roots.push_back(Vec::Constant(1, i * h));
      const int sp = sign_of(values((i + n - 1) % n));
      if (sp == sb) zc.suspect = true;
      continue;
    }
    if (sa * sb < 0) {
      zc.roots.push_back(Vec::Constant(1, bisect(f, i * h, (i + 1) * h, a)));
      continue;
    }
    // tangential zero candidates: local minimum of |f| without a sign change
    const double p = values((i + n - 1) % n);
    if (sb != 0 && sign_of(p) == sa && std::abs(a) <= std::abs(p) && std::abs(a) <= std::abs(b)) {
      if (golden_min_abs(f, (i - 1) * h, (i + 1) * h) < kTangentTol) zc.suspect = true;
    }
  }
  zc.count = static_cast<int>(zc.roots.size());
  return zc;
}

ZeroCount count_zeros_1d(const std::function<double(double)>& f, int grid_size) {
  if (grid_size < 4) throw Error("bad-resolution", "1d grid needs at least 4 points");
  Vec values(grid_size);
  for (int i = 0; i < grid_size; ++i) values(i) = f(2.0 * kPi * i / grid_size);
  return count_zeros_1d(values, f);
}

ZeroCount count_zeros_2d(const FieldPair& field, const Manifold& m, const Grid2dOptions& options) {
  require_2d(m);
  const Grid2d coarse = make_grid(m, options.rows, options.cols);
  const Grid2d fine = make_grid(m, 2 * coarse.rows, 2 * coarse.cols);
  const auto sample = [&](const Grid2d& g, std::vector<Vec>& pts, std::vector<double>& v1, std::vector<double>& v2) {
    pts = grid_points(m, g);
    v1.resize(pts.size());
    v2.resize(pts.size());
    Eigen::Vector2d f;
    Mat grad;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      field(pts[i], f, grad);
      v1[i] = f(0);
      v2[i] = f(1);
    }
  };
  std::vector<Vec> cp, fp;
  std::vector<double> c1, c2, f1, f2;
  sample(coarse, cp, c1, c2);
  if (!options.recount) {
    return count_2d_with_values(field, m, coarse, cp, c1, c2, nullptr, nullptr, nullptr, nullptr,
                                options.max_newton_iters);
  }
  sample(fine, fp, f1, f2);
  return count_2d_with_values(field, m, coarse, cp, c1, c2, &fine, &fp, &f1, &f2, options.max_newton_iters);
}

ZeroCountEstimate estimate(std::span<const FunctionSpace> spaces, long samples, std::uint64_t seed,
                           const EstimateOptions& options) {
  if (spaces.empty()) throw Error("dimension-mismatch", "no function spaces given");
  if (samples < 1) throw Error("bad-samples", "sample count must be positive");
  const Manifold& m = spaces.front().manifold();
  const int n = m.dim();
  if (static_cast<int>(spaces.size()) != n) {
    throw Error("dimension-mismatch", std::to_string(spaces.size()) + " spaces on the " + std::to_string(n) +
                                          "-dimensional manifold " + m.name() + "; need one per dimension");
  }
  for (const auto& s : spaces) {
    if (s.manifold().factors() != m.factors()) throw Error("dimension-mismatch", "spaces live on different manifolds");
  }

  // Factorized tori: space i depends on circle perm[i] only; the common
  // zeros are the product of the per-circle zero sets.
  std::vector<int> perm;
  if (m.is_torus()) {
    std::vector<bool> used(n, false);
    for (const auto& s : spaces) {
      const auto f = s.single_factor();
      if (!f || used[*f]) {
        perm.clear();
        break;
      }
      used[*f] = true;
      perm.push_back(*f);
    }
  }
  const bool factorized = static_cast<int>(perm.size()) == n;
  if (!factorized && n != 2) {
    throw Error("unsupported-manifold", "zero counting for n = " + std::to_string(n) +
                                            " needs a torus with each space on its own circle");
  }
  if (!factorized) require_2d(m);

  // Basis values at grid nodes.
  std::vector<Mat> table_1d;  // [space] grid x m, along its circle
  Grid2d coarse, fine;
  std::vector<Vec> coarse_pts, fine_pts;
  std::vector<Mat> coarse_tab, fine_tab;  // [space] m x nodes
  const int g1 = options.grid_1d;
  if (factorized) {
    for (int i = 0; i < n; ++i) {
      Mat t(g1, spaces[i].size());
      Vec chart = Vec::Zero(n);
      for (int k = 0; k < g1; ++k) {
        chart(perm[i]) = 2.0 * kPi * k / g1;
        t.row(k) = spaces[i].values(m.embed(chart)).transpose();
      }
      table_1d.push_back(std::move(t));
    }
  } else {
    coarse = make_grid(m, options.grid_2d.rows, options.grid_2d.cols);
    fine = make_grid(m, 2 * coarse.rows, 2 * coarse.cols);
    coarse_pts = grid_points(m, coarse);
    if (options.grid_2d.recount) fine_pts = grid_points(m, fine);
    for (const auto& s : spaces) {
      const auto tabulate = [&](const std::vector<Vec>& pts) {
        Mat t(s.size(), static_cast<Eigen::Index>(pts.size()));
        for (std::size_t k = 0; k < pts.size(); ++k) t.col(static_cast<Eigen::Index>(k)) = s.values(pts[k]);
        return t;
      };
      coarse_tab.push_back(tabulate(coarse_pts));
      if (options.grid_2d.recount) fine_tab.push_back(tabulate(fine_pts));
    }
  }

  ZeroCountEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.counts.assign(samples, 0);
  std::vector<char> suspect(samples, 0);
  parallel_for(
      static_cast<std::size_t>(samples),
      [&](std::size_t s) {
        std::mt19937_64 rng(stream_seed(seed, s));
        std::vector<Vec> coef;
        for (const auto& sp : spaces) coef.push_back(sample_unit(sp.size(), rng));
        if (factorized) {
          int count = 1;
          bool sus = false;
          for (int i = 0; i < n; ++i) {
            const FunctionSpace& sp = spaces[i];
            const int circle = perm[i];
            const auto f = [&](double t) {
              Vec chart = Vec::Zero(n);
              chart(circle) = t;
              return coef[i].dot(sp.values(m.embed(chart)));
            };
            const ZeroCount zc = count_zeros_1d(table_1d[i] * coef[i], f);
            count *= zc.count;
            sus = sus || zc.suspect;
          }
          est.counts[s] = count;
          suspect[s] = sus;
          return;
        }
        const FieldPair field = [&](const Vec& x, Eigen::Vector2d& values, Mat& gradients) {
          gradients.resize(2, m.ambient_dim());
          for (int i = 0; i < 2; ++i) {
            Vec v;
            Mat g;
            spaces[i].evaluate(x, v, g);
            values(i) = coef[i].dot(v);
            gradients.row(i) = coef[i].transpose() * g;
          }
        };
        const auto row_values = [&](const Mat& tab, const Vec& c) {
          const Vec v = tab.transpose() * c;
          return std::vector<double>(v.data(), v.data() + v.size());
        };
        const std::vector<double> c1 = row_values(coarse_tab[0], coef[0]);
        const std::vector<double> c2 = row_values(coarse_tab[1], coef[1]);
        ZeroCount zc;
        if (options.grid_2d.recount) {
          const std::vector<double> f1 = row_values(fine_tab[0], coef[0]);
          const std::vector<double> f2 = row_values(fine_tab[1], coef[1]);
          zc = count_2d_with_values(field, m, coarse, coarse_pts, c1, c2, &fine, &fine_pts, &f1, &f2,
                                    options.grid_2d.max_newton_iters);
        } else {
          zc = count_2d_with_values(field, m, coarse, coarse_pts, c1, c2, nullptr, nullptr, nullptr, nullptr,
                                    options.grid_2d.max_newton_iters);
        }
        est.counts[s] = zc.count;
        suspect[s] = zc.suspect;
      },
      options.workers);

  double sum = 0.0;
  for (long s = 0; s < samples; ++s) {
    est.suspects.push_back(suspect[s] != 0);
    if (suspect[s]) {
      ++est.suspect_samples;
      continue;
    }
    ++est.valid_samples;
    ++est.histogram[est.counts[s]];
    sum += est.counts[s];
  }
  const double rate = static_cast<double>(est.suspect_samples) / static_cast<double>(samples);
  if (est.valid_samples == 0 || rate > options.max_suspect_rate) {
    throw Error("unreliable-oracle", std::to_string(est.suspect_samples) + " of " + std::to_string(samples) +
                                         " samples had unreliable zero counts");
  }
  const double k = static_cast<double>(est.valid_samples);
  est.mean = sum / k;
  double ss = 0.0;
  for (long s = 0; s < samples; ++s) {
    if (!suspect[s]) ss += (est.counts[s] - est.mean) * (est.counts[s] - est.mean);
  }
  const double var = est.valid_samples > 1 ? ss / (k - 1.0) : 0.0;
  est.stderr_ = std::sqrt(var / k);
  return est;
}

}  // namespace crofton
