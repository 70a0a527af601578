#pragma once

#include <random>
#include <vector>

#include "crofton/convex_body.hpp"
#include "crofton/cosine_transform.hpp"
#include "crofton/gauge_density.hpp"

namespace crofton {

struct DirectionAtom {
  Vec direction;  // unit
  double mass = 0.0;
};

/// Translation-invariant measure on affine hyperplanes {y : <y, u> = t} of
/// V = R^d: phi(u) dH(u) dt with dH the probability Haar measure on Gr(1, V),
/// plus point masses on finitely many directions. phi may be signed.
///
/// An orthonormal `embedding` (N x d) places V inside a larger R^N; the
/// measure then lives on hyperplanes of R^N with normals E u (pull-back
/// along the orthogonal projection onto V).
class NormalMeasure1 {
 public:
  static NormalMeasure1 continuous(HarmonicGauge phi);
  static NormalMeasure1 discrete(int dim, std::vector<DirectionAtom> atoms);

  /// Measure whose density chi_1 is d1(body): the smooth part through the
  /// inverse cosine transform of its width, segments as atoms of mass 2|v|.
  static NormalMeasure1 of_body(const ConvexBody& body, int bandwidth = 0);

  /// Measure for a degree-1 density: T^{-1} of a harmonic gauge, or of_body.
  static NormalMeasure1 of_density(const GaugeDensity& density, int bandwidth = 0);

  NormalMeasure1 embedded(const Mat& embedding) const;

  int dim() const { return dim_; }
  int ambient_dim() const { return static_cast<int>(embedding_.rows()); }

  /// chi_1 of the measure on the segment [0, v], v in R^N: the measure of
  /// hyperplanes crossing it.
  double chi(const Vec& v) const;

  struct Draw {
    Vec normal;  // unit, in R^N
    double weight = 0.0;
  };

  /// Importance-sampled direction with signed weight; E[weight g(normal)]
  /// equals int g d(phi dH + atoms) for even g.
  Draw draw(std::mt19937_64& rng) const;

  const std::optional<HarmonicGauge>& phi() const { return phi_; }
  const std::vector<DirectionAtom>& atoms() const { return atoms_; }

 private:
  NormalMeasure1() = default;
  void build_proposal();

  int dim_ = 0;
  std::optional<HarmonicGauge> phi_;
  std::vector<DirectionAtom> atoms_;
  Mat embedding_;

  // proposal: cells of lines, cumulative probabilities, per-cell density
  std::vector<double> cell_cdf_;
  std::vector<double> cell_prob_;
  int cells_a_ = 0;
  int cells_b_ = 0;
  double continuous_prob_ = 0.0;
  std::vector<double> atom_cdf_;
};

}  // namespace crofton
