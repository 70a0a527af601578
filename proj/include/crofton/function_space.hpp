#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crofton/manifold.hpp"

namespace crofton {

/// Function of a single factor of a product manifold.
struct FactorAtom {
  enum class Kind { Const, Coord, Cos, Sin, Harmonic };
  Kind kind = Kind::Const;
  int a = 0;  // Coord: coordinate within the block; Cos/Sin: frequency; Harmonic: degree l
  int b = 0;  // Harmonic: order m

  auto operator<=>(const FactorAtom&) const = default;
};

/// Product of one atom per factor.
using Monomial = std::vector<FactorAtom>;

/// Finite-dimensional space of functions on a manifold, held as a basis
/// f_i = sum_j C_ij P_j over product monomials P_j. Values and ambient
/// gradients come in closed form.
class FunctionSpace {
 public:
  FunctionSpace(Manifold manifold, std::vector<Monomial> terms, Mat coefficients, std::string label);

  /// Descriptor grammar:
  ///   "linear"            restrictions of ambient coordinates; on a torus
  ///                       the space in position `slot` takes the
  ///                       coordinates of circle `slot`
  ///   "linear factor=<j>" ambient coordinates of factor j
  ///   "eig <lambda>" / "eig lambda=<lambda>"  Laplacian eigenspace
  ///   "custom k:l ..."    on tori: cos(k.theta), sin(k.theta) per
  ///                       frequency vector
  /// The result is not yet orthonormal.
  static FunctionSpace parse(const Manifold& manifold, const std::string& descriptor, int slot = 0);
  static std::string supported_descriptors();

  static FunctionSpace linear(const Manifold& manifold, std::optional<int> factor);
  static FunctionSpace eigenspace(const Manifold& manifold, double lambda);
  static FunctionSpace frequencies(const Manifold& manifold, const std::vector<std::vector<int>>& freqs);

  int size() const { return static_cast<int>(coefficients_.rows()); }
  const Manifold& manifold() const { return manifold_; }
  const std::string& label() const { return label_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  const Mat& coefficients() const { return coefficients_; }
  std::optional<double> eigenvalue() const { return eigenvalue_; }

  FunctionSpace with_coefficients(Mat coefficients) const;

  Vec values(const Vec& point) const;
  /// values (m) and ambient gradients (m x N) of the polynomial extensions.
  void evaluate(const Vec& point, Vec& values, Mat& gradients) const;

  /// Monomial values (p) at a point; basis values are coefficients() * this.
  Vec term_values(const Vec& point) const;

  /// L2 Gram matrix by manifold quadrature.
  Mat gram_l2(int resolution = 0) const;

  /// Index of the only factor the basis depends on, if there is one.
  std::optional<int> single_factor() const;

 private:
  void term_data(const Vec& point, Vec& values, Mat* gradients) const;

  Manifold manifold_;
  std::vector<Monomial> terms_;
  Mat coefficients_;
  std::string label_;
  std::optional<double> eigenvalue_;
};

enum class InnerProduct { L2, GivenGram };

/// Replaces the basis by G^{-1/2} times it (span unchanged), G the Gram
/// matrix of the current basis: by quadrature for L2, `gram` otherwise.
/// Throws "degenerate-space" if G is numerically singular.
FunctionSpace orthonormalize(const FunctionSpace& space, InnerProduct inner = InnerProduct::L2, const Mat& gram = {});

/// Comma-separated descriptors, each parsed with its position as slot and
/// orthonormalized in L2.
std::vector<FunctionSpace> parse_spaces(const Manifold& manifold, const std::string& list);

}  // namespace crofton
