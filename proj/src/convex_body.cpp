#include "crofton/convex_body.hpp"

#include <cmath>

#include "crofton/error.hpp"

namespace crofton {

namespace {

void require_dim(int dim) {
  if (dim < 1 || dim > 4) {
    throw Error("bad-dimension", "ambient dimension must be in 1..4, got " + std::to_string(dim));
  }
}

Vec to_vec(const nlohmann::json& j) {
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

nlohmann::json from_vec(const Vec& v) {
  auto j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v(i));
  return j;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ConvexBody ConvexBody::ellipsoid(Mat shape) {
  const auto n = static_cast<int>(shape.rows());
  require_dim(n);
  if (shape.cols() != shape.rows()) throw Error("bad-shape", "ellipsoid shape must be square");
  const double scale = std::max(1.0, shape.cwiseAbs().maxCoeff());
  if ((shape - shape.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw Error("not-psd", "ellipsoid shape is not symmetric");
  }
  shape = 0.5 * (shape + shape.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(shape, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -1e-10 * scale) {
    throw Error("not-psd", "ellipsoid shape has a negative eigenvalue");
  }
  return ConvexBody(Ellipsoid{std::move(shape)}, n);
}

ConvexBody ConvexBody::segment(Vec half) {
  const auto n = static_cast<int>(half.size());
  require_dim(n);
  return ConvexBody(Segment{std::move(half)}, n);
}

ConvexBody ConvexBody::ball(int dim, double radius) {
  require_dim(dim);
  if (!(radius >= 0.0)) throw Error("bad-radius", "ball radius must be non-negative");
  return ConvexBody(Ball{dim, radius}, dim);
}

ConvexBody ConvexBody::zonotope(int dim, std::vector<Vec> generators) {
  require_dim(dim);
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error("dimension-mismatch", "zonotope generator has wrong length");
  }
  return ConvexBody(Zonotope{dim, std::move(generators)}, dim);
}

ConvexBody ConvexBody::sum(std::vector<MinkowskiTerm> terms) {
  if (terms.empty()) throw Error("bad-shape", "Minkowski sum needs at least one term");
  const int n = terms.front().body.dim();
  for (const auto& t : terms) {
    if (t.body.dim() != n) throw Error("dimension-mismatch", "Minkowski sum terms differ in dimension");
    if (!(t.coef >= 0.0)) throw Error("bad-coefficient", "Minkowski coefficients must be non-negative");
  }
  return ConvexBody(MinkowskiSum{std::move(terms)}, n);
}

std::string ConvexBody::kind() const {
  return std::visit(overloaded{[](const Ellipsoid&) { return std::string("ellipsoid"); },
                               [](const Segment&) { return std::string("segment"); },
                               [](const Ball&) { return std::string("ball"); },
                               [](const Zonotope&) { return std::string("zonotope"); },
                               [](const MinkowskiSum&) { return std::string("sum"); }},
                    body_);
}

double ConvexBody::support(const Vec& u) const {
  if (u.size() != dim_) throw Error("dimension-mismatch", "support direction has wrong length");
  return std::visit(
      overloaded{[&](const Ellipsoid& e) { return std::sqrt(std::max(0.0, u.dot(e.shape * u))); },
                 [&](const Segment& s) { return std::abs(u.dot(s.half)); },
                 [&](const Ball& b) { return b.radius * u.norm(); },
                 [&](const Zonotope& z) {
                   double h = 0.0;
                   for (const auto& g : z.generators) h += std::abs(u.dot(g));
                   return h;
                 },
                 [&](const MinkowskiSum& m) {
                   double h = 0.0;
                   for (const auto& t : m.terms) h += t.coef * t.body.support(u);
                   return h;
                 }},
      body_);
}

ConvexBody operator+(const ConvexBody& a, const ConvexBody& b) {
  return ConvexBody::sum({{1.0, a}, {1.0, b}});
}

ConvexBody operator*(double c, const ConvexBody& a) { return ConvexBody::sum({{c, a}}); }

double CanonicalSum::support(const Vec& u) const {
  double h = 0.0;
  for (const auto& q : ellipsoids) h += std::sqrt(std::max(0.0, u.dot(q * u)));
  for (const auto& v : segments) h += std::abs(u.dot(v));
  return h;
}

CanonicalSum CanonicalSum::project(const Mat& frame) const {
  CanonicalSum out;
  out.dim = static_cast<int>(frame.cols());
  for (const auto& q : ellipsoids) out.ellipsoids.push_back(frame.transpose() * q * frame);
  for (const auto& v : segments) out.segments.push_back(frame.transpose() * v);
  return out;
}

CanonicalSum CanonicalSum::normalized(double rank_tol) const {
  CanonicalSum out;
  out.dim = dim;
  for (const auto& q : ellipsoids) {
    const SymmetricEigen eig = symmetric_eigen(q);
    const double top = eig.values.size() ? eig.values.maxCoeff() : 0.0;
    if (top <= 0.0) continue;
    int rank = 0;
    for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
      if (eig.values(i) > rank_tol * top) ++rank;
    }
    if (rank == 1) {
      Eigen::Index imax;
      eig.values.maxCoeff(&imax);
      out.segments.push_back(std::sqrt(top) * eig.vectors.col(imax));
    } else {
      out.ellipsoids.push_back(q);
    }
  }
  double scale = 0.0;
  for (const auto& v : segments) scale = std::max(scale, v.norm());
  for (const auto& v : segments) {
    if (v.norm() > 1e-14 * scale && v.norm() > 0.0) out.segments.push_back(v);
  }
  return out;
}

CanonicalSum CanonicalSum::operator+(const CanonicalSum& other) const {
  if (other.dim != dim) throw Error("dimension-mismatch", "cannot add bodies of different dimension");
  CanonicalSum out = *this;
  out.ellipsoids.insert(out.ellipsoids.end(), other.ellipsoids.begin(), other.ellipsoids.end());
  out.segments.insert(out.segments.end(), other.segments.begin(), other.segments.end());
  return out;
}

CanonicalSum canonicalize(const ConvexBody& body) {
  CanonicalSum out;
  out.dim = body.dim();
  std::visit(overloaded{[&](const Ellipsoid& e) { out.ellipsoids.push_back(e.shape); },
                        [&](const Segment& s) { out.segments.push_back(s.half); },
                        [&](const Ball& b) {
                          out.ellipsoids.push_back(b.radius * b.radius * Mat::Identity(b.dim, b.dim));
                        },
                        [&](const Zonotope& z) {
                          out.segments.insert(out.segments.end(), z.generators.begin(), z.generators.end());
                        },
                        [&](const MinkowskiSum& m) {
                          for (const auto& t : m.terms) {
                            const CanonicalSum part = canonicalize(t.body);
                            for (const auto& q : part.ellipsoids) out.ellipsoids.push_back(t.coef * t.coef * q);
                            for (const auto& v : part.segments) out.segments.push_back(t.coef * v);
                          }
                        }},
             body.variant());
  return out;
}

ConvexBody to_body(const CanonicalSum& sum) {
  std::vector<MinkowskiTerm> terms;
  for (const auto& q : sum.ellipsoids) terms.push_back({1.0, ConvexBody::ellipsoid(q)});
  if (!sum.segments.empty()) terms.push_back({1.0, ConvexBody::zonotope(sum.dim, sum.segments)});
  if (terms.empty()) return ConvexBody::ball(sum.dim, 0.0);
  if (terms.size() == 1) return terms.front().body;
  return ConvexBody::sum(std::move(terms));
}

nlohmann::json to_json(const ConvexBody& body) {
  return std::visit(
      overloaded{[](const Ellipsoid& e) {
                   auto rows = nlohmann::json::array();
                   for (Eigen::Index i = 0; i < e.shape.rows(); ++i) rows.push_back(from_vec(e.shape.row(i).transpose()));
                   return nlohmann::json{{"type", "ellipsoid"}, {"Q", rows}};
                 },
                 [](const Segment& s) { return nlohmann::json{{"type", "segment"}, {"v", from_vec(s.half)}}; },
                 [](const Ball& b) { return nlohmann::json{{"type", "ball"}, {"dim", b.dim}, {"radius", b.radius}}; },
                 [](const Zonotope& z) {
                   auto gens = nlohmann::json::array();
                   for (const auto& g : z.generators) gens.push_back(from_vec(g));
                   return nlohmann::json{{"type", "zonotope"}, {"dim", z.dim}, {"generators", gens}};
                 },
                 [](const MinkowskiSum& m) {
                   auto terms = nlohmann::json::array();
                   for (const auto& t : m.terms) terms.push_back({{"coef", t.coef}, {"body", to_json(t.body)}});
                   return nlohmann::json{{"type", "sum"}, {"terms", terms}};
                 }},
      body.variant());
}

ConvexBody body_from_json(const nlohmann::json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "ellipsoid") {
      const auto& rows = j.at("Q");
      const auto n = static_cast<Eigen::Index>(rows.size());
      Mat q(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != n) throw Error("bad-json", "Q must be square");
        q.row(i) = to_vec(rows[i]).transpose();
      }
      return ConvexBody::ellipsoid(q);
    }
    if (type == "segment") return ConvexBody::segment(to_vec(j.at("v")));
    if (type == "ball") return ConvexBody::ball(j.at("dim").get<int>(), j.value("radius", 1.0));
    if (type == "zonotope") {
      std::vector<Vec> gens;
      for (const auto& g : j.at("generators")) gens.push_back(to_vec(g));
      const int dim = j.contains("dim") ? j.at("dim").get<int>()
                                        : (gens.empty() ? 0 : static_cast<int>(gens.front().size()));
      return ConvexBody::zonotope(dim, std::move(gens));
    }
    if (type == "sum") {
      std::vector<MinkowskiTerm> terms;
      for (const auto& t : j.at("terms")) terms.push_back({t.value("coef", 1.0), body_from_json(t.at("body"))});
      return ConvexBody::sum(std::move(terms));
    }
    throw Error("bad-json", "unknown body type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad-json", e.what());
  }
}

}  // namespace crofton
