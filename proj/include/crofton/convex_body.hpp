#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "crofton/linalg.hpp"

namespace crofton {

// Centrally symmetric convex bodies centred at the origin, each described by
// its support function. Ambient dimension 1..4.

/// Body with support function sqrt(u^T Q u). Q is symmetric PSD; a singular Q
/// gives a lower-dimensional ellipsoid.
struct Ellipsoid {
  Mat shape;
};

/// The segment [-half, half].
struct Segment {
  Vec half;
};

struct Ball {
  int dim = 0;
  double radius = 1.0;
};

/// Minkowski sum of the segments [-g, g] over all generators g.
struct Zonotope {
  int dim = 0;
  std::vector<Vec> generators;
};

struct MinkowskiTerm;

struct MinkowskiSum {
  std::vector<MinkowskiTerm> terms;
};

class ConvexBody {
 public:
  using Variant = std::variant<Ellipsoid, Segment, Ball, Zonotope, MinkowskiSum>;

  static ConvexBody ellipsoid(Mat shape);
  static ConvexBody segment(Vec half);
  static ConvexBody ball(int dim, double radius = 1.0);
  static ConvexBody zonotope(int dim, std::vector<Vec> generators);
  static ConvexBody sum(std::vector<MinkowskiTerm> terms);

  int dim() const { return dim_; }
  const Variant& variant() const { return body_; }
  std::string kind() const;

  /// h(u) = max over the body of <x, u>.
  double support(const Vec& u) const;

 private:
  ConvexBody(Variant body, int dim) : body_(std::move(body)), dim_(dim) {}

  Variant body_;
  int dim_ = 0;
};

struct MinkowskiTerm {
  double coef = 1.0;
  ConvexBody body;
};

ConvexBody operator+(const ConvexBody& a, const ConvexBody& b);
ConvexBody operator*(double c, const ConvexBody& a);

/// Flattened form of any body: a Minkowski sum of ellipsoids (shape
/// matrices) and segments (half vectors). Every variant maps onto it
/// exactly.
struct CanonicalSum {
  int dim = 0;
  std::vector<Mat> ellipsoids;
  std::vector<Vec> segments;

  double support(const Vec& u) const;

  /// Orthogonal projection onto the span of the orthonormal columns of
  /// `frame`, expressed in frame coordinates.
  CanonicalSum project(const Mat& frame) const;

  /// Drops rank-0 ellipsoids and zero segments, turns rank-1 ellipsoids into
  /// segments. Eigenvalues below `rank_tol` times the largest one count as
  /// zero.
  CanonicalSum normalized(double rank_tol = 1e-10) const;

  CanonicalSum operator+(const CanonicalSum& other) const;
};

CanonicalSum canonicalize(const ConvexBody& body);
ConvexBody to_body(const CanonicalSum& sum);

nlohmann::json to_json(const ConvexBody& body);
ConvexBody body_from_json(const nlohmann::json& j);

}  // namespace crofton
