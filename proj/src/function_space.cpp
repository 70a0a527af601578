#include "crofton/function_space.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "crofton/error.hpp"
#include "crofton/harmonics.hpp"

namespace crofton {

namespace {

using Kind = FactorAtom::Kind;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Monomial constant_monomial(const Manifold& m) { return Monomial(m.factor_count(), FactorAtom{}); }

class TermBuilder {
 public:
  explicit TermBuilder(const Manifold& m) : manifold_(m) {}

  int index(const Monomial& t) {
    const auto [it, inserted] = lookup_.emplace(t, static_cast<int>(terms_.size()));
    if (inserted) terms_.push_back(t);
    return it->second;
  }

  void add_function(const std::vector<std::pair<double, Monomial>>& parts) {
    std::vector<std::pair<int, double>> row;
    for (const auto& [c, t] : parts) row.push_back({index(t), c});
    rows_.push_back(std::move(row));
  }

  FunctionSpace build(const std::string& label) {
    Mat c = Mat::Zero(static_cast<Eigen::Index>(rows_.size()), static_cast<Eigen::Index>(terms_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (const auto& [j, v] : rows_[i]) c(static_cast<Eigen::Index>(i), j) += v;
    }
    return FunctionSpace(manifold_, terms_, c, label);
  }

 private:
  const Manifold& manifold_;
  std::vector<Monomial> terms_;
  std::map<Monomial, int> lookup_;
  std::vector<std::vector<std::pair<int, double>>> rows_;
};

// Eigenfunctions of one factor with eigenvalue lambda_f.
struct FactorEigen {
  double lambda;
  std::vector<FactorAtom> atoms;
};

std::vector<FactorEigen> factor_eigenspaces(int factor_dim, double max_lambda) {
  std::vector<FactorEigen> out;
  if (factor_dim == 1) {
    out.push_back({0.0, {FactorAtom{}}});
    for (int k = 1; k * k <= max_lambda + 1e-9; ++k) {
      out.push_back({static_cast<double>(k * k), {{Kind::Cos, k, 0}, {Kind::Sin, k, 0}}});
    }
  } else {
    out.push_back({0.0, {FactorAtom{}}});
    for (int l = 1; l * (l + 1) <= max_lambda + 1e-9; ++l) {
      FactorEigen e{static_cast<double>(l * (l + 1)), {}};
      for (int m = -l; m <= l; ++m) e.atoms.push_back({Kind::Harmonic, l, m});
      out.push_back(std::move(e));
    }
  }
  return out;
}

double atom_value(const FactorAtom& a, const Vec& x, int offset, int factor_dim, const std::vector<double>& sh,
                  const Mat& sh_grad, Vec* grad) {
  switch (a.kind) {
    case Kind::Const:
      if (grad) grad->setZero(factor_dim + 1);
      return 1.0;
    case Kind::Coord:
      if (grad) {
        grad->setZero(factor_dim + 1);
        (*grad)(a.a) = 1.0;
      }
      return x(offset + a.a);
    case Kind::Cos:
    case Kind::Sin: {
      const double px = x(offset), py = x(offset + 1);
      const double t = std::atan2(py, px);
      const double r2 = px * px + py * py;
      const double c = std::cos(a.a * t), s = std::sin(a.a * t);
      if (grad) {
        // grad t = (-y, x) / r^2
        const double d = a.kind == Kind::Cos ? -a.a * s : a.a * c;
        grad->resize(2);
        (*grad)(0) = -d * py / r2;
        (*grad)(1) = d * px / r2;
      }
      return a.kind == Kind::Cos ? c : s;
    }
    case Kind::Harmonic: {
      const int i = sh_index(a.a, a.b);
      if (grad) *grad = sh_grad.row(i).transpose();
      return sh[i];
    }
  }
  return 0.0;
}

}  // namespace

FunctionSpace::FunctionSpace(Manifold manifold, std::vector<Monomial> terms, Mat coefficients, std::string label)
    : manifold_(std::move(manifold)),
      terms_(std::move(terms)),
      coefficients_(std::move(coefficients)),
      label_(std::move(label)) {
  if (coefficients_.cols() != static_cast<Eigen::Index>(terms_.size())) {
    throw Error("bad-space", "coefficient matrix does not match the monomial list");
  }
  for (const auto& t : terms_) {
    if (static_cast<int>(t.size()) != manifold_.factor_count()) {
      throw Error("bad-space", "monomial has the wrong number of factors");
    }
    for (int f = 0; f < manifold_.factor_count(); ++f) {
      const FactorAtom& a = t[f];
      const int d = manifold_.factors()[f];
      const bool ok = a.kind == Kind::Const || (a.kind == Kind::Coord && a.a >= 0 && a.a <= d) ||
                      (d == 1 && (a.kind == Kind::Cos || a.kind == Kind::Sin) && a.a >= 0) ||
                      (d == 2 && a.kind == Kind::Harmonic && a.a >= 0 && std::abs(a.b) <= a.a);
      if (!ok) throw Error("bad-space", "monomial atom does not fit its factor");
    }
  }
}

FunctionSpace FunctionSpace::linear(const Manifold& manifold, std::optional<int> factor) {
  TermBuilder tb(manifold);
  for (int f = 0; f < manifold.factor_count(); ++f) {
    if (factor && *factor != f) continue;
    for (int i = 0; i <= manifold.factors()[f]; ++i) {
      Monomial t = constant_monomial(manifold);
      t[f] = {Kind::Coord, i, 0};
      tb.add_function({{1.0, t}});
    }
  }
  FunctionSpace s = tb.build(factor ? "linear factor=" + std::to_string(*factor) : "linear");
  if (s.size() == 0) throw Error("unknown-space", "factor index out of range");
  if (manifold.factor_count() == 1 || factor) s.eigenvalue_ = manifold.factors()[factor.value_or(0)];
  return s;
}

FunctionSpace FunctionSpace::eigenspace(const Manifold& manifold, double lambda) {
  if (!(lambda >= 0.0)) throw Error("bad-eigenvalue", "Laplacian eigenvalues are non-negative");
  std::vector<std::vector<FactorEigen>> per_factor;
  for (int d : manifold.factors()) per_factor.push_back(factor_eigenspaces(d, lambda));
  TermBuilder tb(manifold);
  Monomial current = constant_monomial(manifold);
  const auto recurse = [&](auto&& self, int f, double remaining) -> void {
    if (f == manifold.factor_count()) {
      if (std::abs(remaining) < 1e-9) tb.add_function({{1.0, current}});
      return;
    }
    for (const auto& e : per_factor[f]) {
      if (e.lambda > remaining + 1e-9) continue;
      for (const auto& a : e.atoms) {
        current[f] = a;
        self(self, f + 1, remaining - e.lambda);
      }
    }
    current[f] = FactorAtom{};
  };
  recurse(recurse, 0, lambda);
  std::ostringstream label;
  label << "eig " << lambda;
  FunctionSpace s = tb.build(label.str());
  if (s.size() == 0) {
    throw Error("bad-eigenvalue", label.str() + " is not a Laplacian eigenvalue of " + manifold.name());
  }
  s.eigenvalue_ = lambda;
  return s;
}

FunctionSpace FunctionSpace::frequencies(const Manifold& manifold, const std::vector<std::vector<int>>& freqs) {
  if (!manifold.is_torus()) throw Error("unknown-space", "custom frequency spaces are defined on tori only");
  const int n = manifold.dim();
  TermBuilder tb(manifold);
  std::optional<double> common;
  bool homogeneous = true;
  for (const auto& k : freqs) {
    if (static_cast<int>(k.size()) != n) {
      throw Error("unknown-space", "frequency vector needs " + std::to_string(n) + " entries");
    }
    // cos(k.t) + i sin(k.t) = prod_f (cos k_f t_f + i sin k_f t_f); expand.
    std::vector<int> active;
    double norm2 = 0.0;
    for (int f = 0; f < n; ++f) {
      if (k[f] != 0) active.push_back(f);
      norm2 += static_cast<double>(k[f]) * k[f];
    }
    if (!common) common = norm2;
    if (std::abs(*common - norm2) > 1e-12) homogeneous = false;
    std::vector<std::pair<double, Monomial>> re, im;
    for (unsigned mask = 0; mask < (1u << active.size()); ++mask) {
      Monomial t = constant_monomial(manifold);
      double sign = 1.0;
      int sines = 0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const int f = active[i];
        const int freq = std::abs(k[f]);
        if (mask & (1u << i)) {
          t[f] = {Kind::Sin, freq, 0};
          if (k[f] < 0) sign = -sign;
          ++sines;
        } else {
          t[f] = {Kind::Cos, freq, 0};
        }
      }
      // i^sines
      if (sines % 2 == 0) {
        re.push_back({(sines / 2) % 2 == 0 ? sign : -sign, t});
      } else {
        im.push_back({((sines - 1) / 2) % 2 == 0 ? sign : -sign, t});
      }
    }
    tb.add_function(re);
    if (!im.empty()) tb.add_function(im);
  }
  std::string label = "custom";
  for (const auto& k : freqs) {
    label += " ";
    for (int f = 0; f < n; ++f) label += (f ? ":" : "") + std::to_string(k[f]);
  }
  FunctionSpace s = tb.build(label);
  if (s.size() == 0) throw Error("unknown-space", "custom space needs at least one frequency vector");
  if (homogeneous) s.eigenvalue_ = common;
  return s;
}

FunctionSpace FunctionSpace::parse(const Manifold& manifold, const std::string& descriptor, int slot) {
  std::istringstream in(trim(descriptor));
  std::string head;
  in >> head;
  std::vector<std::string> args;
  for (std::string tok; in >> tok;) args.push_back(tok);
  const auto value_of = [](const std::string& tok, const std::string& key) -> std::optional<std::string> {
    if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
    return std::nullopt;
  };
  try {
    if (head == "linear") {
      if (args.empty()) {
        if (manifold.is_torus()) return linear(manifold, slot % manifold.factor_count());
        return linear(manifold, std::nullopt);
      }
      if (args.size() == 1) {
        if (auto v = value_of(args[0], "factor")) return linear(manifold, std::stoi(*v));
      }
    } else if (head == "eig") {
      if (args.size() == 1) {
        const std::string v = value_of(args[0], "lambda").value_or(args[0]);
        return eigenspace(manifold, std::stod(v));
      }
    } else if (head == "custom") {
      std::vector<std::vector<int>> freqs;
      for (const auto& a : args) {
        std::vector<int> k;
        std::istringstream parts(a);
        for (std::string p; std::getline(parts, p, ':');) k.push_back(std::stoi(p));
        freqs.push_back(std::move(k));
      }
      if (!freqs.empty()) return frequencies(manifold, freqs);
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw Error("unknown-space",
              "cannot parse space '" + trim(descriptor) + "'; supported: " + supported_descriptors());
}

std::string FunctionSpace::supported_descriptors() {
  return "linear, linear factor=<j>, eig <lambda>, eig lambda=<lambda>, custom <k1>:<k2>... (tori)";
}

FunctionSpace FunctionSpace::with_coefficients(Mat coefficients) const {
  FunctionSpace s = *this;
  if (coefficients.cols() != coefficients_.cols()) throw Error("bad-space", "coefficient matrix has wrong width");
  s.coefficients_ = std::move(coefficients);
  return s;
}

void FunctionSpace::term_data(const Vec& point, Vec& values, Mat* gradients) const {
  const int nf = manifold_.factor_count();
  if (point.size() != manifold_.ambient_dim()) throw Error("dimension-mismatch", "point has wrong length");
  std::vector<int> max_degree(nf, -1);
  for (const auto& t : terms_) {
    for (int f = 0; f < nf; ++f) {
      if (t[f].kind == Kind::Harmonic) max_degree[f] = std::max(max_degree[f], t[f].a);
    }
  }
  std::vector<std::vector<double>> sh(nf);
  std::vector<Mat> sh_grad(nf);
  for (int f = 0; f < nf; ++f) {
    if (max_degree[f] >= 0) {
      spherical_harmonics(max_degree[f], point.segment(manifold_.ambient_offset(f), 3), sh[f], sh_grad[f]);
    }
  }
  const auto p = static_cast<Eigen::Index>(terms_.size());
  values.resize(p);
  if (gradients) gradients->setZero(p, manifold_.ambient_dim());
  std::vector<double> av(nf);
  std::vector<Vec> ag(nf);
  for (Eigen::Index j = 0; j < p; ++j) {
    const Monomial& t = terms_[j];
    double v = 1.0;
    for (int f = 0; f < nf; ++f) {
      av[f] = atom_value(t[f], point, manifold_.ambient_offset(f), manifold_.factors()[f], sh[f], sh_grad[f],
                         gradients ? &ag[f] : nullptr);
      v *= av[f];
    }
    values(j) = v;
    if (!gradients) continue;
    for (int f = 0; f < nf; ++f) {
      double others = 1.0;
      for (int g = 0; g < nf; ++g) {
        if (g != f) others *= av[g];
      }
      gradients->row(j).segment(manifold_.ambient_offset(f), ag[f].size()) += others * ag[f].transpose();
    }
  }
}

Vec FunctionSpace::term_values(const Vec& point) const {
  Vec v;
  term_data(point, v, nullptr);
  return v;
}

Vec FunctionSpace::values(const Vec& point) const { return coefficients_ * term_values(point); }

void FunctionSpace::evaluate(const Vec& point, Vec& values, Mat& gradients) const {
  Vec tv;
  Mat tg;
  term_data(point, tv, &tg);
  values = coefficients_ * tv;
  gradients = coefficients_ * tg;
}

Mat FunctionSpace::gram_l2(int resolution) const {
  const Manifold::Quadrature q = manifold_.quadrature(resolution);
  const auto p = static_cast<Eigen::Index>(terms_.size());
  Mat tg = Mat::Zero(p, p);
  for (std::size_t i = 0; i < q.points.size(); ++i) {
    const Vec v = term_values(q.points[i]);
    tg.noalias() += q.weights[i] * v * v.transpose();
  }
  return coefficients_ * tg * coefficients_.transpose();
}

std::optional<int> FunctionSpace::single_factor() const {
  std::optional<int> found;
  for (Eigen::Index j = 0; j < coefficients_.cols(); ++j) {
    if (coefficients_.col(j).cwiseAbs().maxCoeff() == 0.0) continue;
    for (int f = 0; f < manifold_.factor_count(); ++f) {
      if (terms_[j][f].kind == Kind::Const) continue;
      if (found && *found != f) return std::nullopt;
      found = f;
    }
  }
  return found;
}

FunctionSpace orthonormalize(const FunctionSpace& space, InnerProduct inner, const Mat& gram) {
  const Mat g = inner == InnerProduct::L2 ? space.gram_l2() : gram;
  if (g.rows() != space.size() || g.cols() != space.size()) {
    throw Error("dimension-mismatch", "Gram matrix must be " + std::to_string(space.size()) + " x " +
                                          std::to_string(space.size()));
  }
  const Mat sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  const Vec ev = es.eigenvalues();
  if (ev.size() == 0 || ev(0) < 1e-12 * ev(ev.size() - 1) || ev(ev.size() - 1) <= 0.0) {
    throw Error("degenerate-space", "Gram matrix of '" + space.label() + "' is singular");
  }
  const Mat inv_sqrt = es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
  return space.with_coefficients(inv_sqrt * space.coefficients());
}

std::vector<FunctionSpace> parse_spaces(const Manifold& manifold, const std::string& list) {
  std::vector<FunctionSpace> out;
  std::istringstream in(list);
  int slot = 0;
  for (std::string part; std::getline(in, part, ',');) {
    if (trim(part).empty()) continue;
    out.push_back(orthonormalize(FunctionSpace::parse(manifold, part, slot++)));
  }
  return out;
}

}  // namespace crofton
