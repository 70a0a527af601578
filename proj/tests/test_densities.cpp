#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crofton/cosine_transform.hpp"
#include "crofton/density_product.hpp"
#include "crofton/error.hpp"
#include "crofton/gauge_density.hpp"
#include "crofton/harmonics.hpp"
#include "crofton/integral_identities.hpp"
#include "crofton/normal_measure.hpp"

using namespace crofton;

namespace {

constexpr double kPi = std::numbers::pi;

Mat diag(std::initializer_list<double> d) {
  Vec v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

HarmonicGauge random_even_gauge(int dim, int bandwidth, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  HarmonicGauge f = HarmonicGauge::zero(dim, bandwidth);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.degree_of(static_cast<int>(i)) % 2 == 0) f.coeffs[i] = g(rng);
  }
  return f;
}

}  // namespace

TEST_CASE("cosine multipliers") {
  CHECK(cosine_multiplier(2, 0) == doctest::Approx(0.63661977236758127).epsilon(1e-14));
  CHECK(cosine_multiplier(2, 2) == doctest::Approx(0.21220659078919371).epsilon(1e-14));
  CHECK(cosine_multiplier(2, 4) == doctest::Approx(-0.042441318157838831).epsilon(1e-14));
  CHECK(cosine_multiplier(2, 6) == doctest::Approx(0.018189136353359461).epsilon(1e-14));
  CHECK(cosine_multiplier(3, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cosine_multiplier(3, 2) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(cosine_multiplier(3, 4) == doctest::Approx(-1.0 / 48).epsilon(1e-14));
  CHECK(cosine_multiplier(3, 6) == doctest::Approx(1.0 / 128).epsilon(1e-14));
}

TEST_CASE("transform of a constant is the mean of |cos|") {
  const HarmonicGauge one = HarmonicGauge::constant(2, 1.0);
  Vec u(2);
  u << 0.6, 0.8;
  CHECK(cosine_transform(one)(u) == doctest::Approx(2 / kPi).epsilon(1e-14));
  const HarmonicGauge one3 = HarmonicGauge::constant(3, 1.0);
  Vec w(3);
  w << 0, 0, 1;
  CHECK(cosine_transform(one3)(w) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("transform round trip") {
  std::mt19937_64 rng(3);
  for (int dim : {2, 3}) {
    const HarmonicGauge f = random_even_gauge(dim, dim == 2 ? 12 : 8, rng);
    const HarmonicGauge back = cosine_transform(inverse_cosine_transform(f));
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) CHECK(back.coeffs[i] == doctest::Approx(f.coeffs[i]).epsilon(1e-10));
  }
}

TEST_CASE("transform rejects odd input") {
  HarmonicGauge f = HarmonicGauge::zero(2, 2);
  f.coeffs[1] = 1.0;
  CHECK_THROWS_AS(cosine_transform(f), Error);
}

TEST_CASE("projection recovers a band-limited gauge") {
  const auto f = [](const Vec& u) { return 1.0 + 0.3 * (u(0) * u(0) - u(1) * u(1)); };
  const HarmonicGauge g = project(f, 2, 8);
  Vec u(2);
  u << std::cos(0.4), std::sin(0.4);
  CHECK(g(u) == doctest::Approx(f(u)).epsilon(1e-12));
}

TEST_CASE("spherical harmonics are orthonormal at low degree") {
  Vec x(3);
  x << 0, 0, 1;
  CHECK(spherical_harmonic(0, 0, x) == doctest::Approx(0.5 / std::sqrt(kPi)));
  CHECK(spherical_harmonic(1, 0, x) == doctest::Approx(std::sqrt(3 / (4 * kPi))));
  CHECK(spherical_harmonic(1, 1, x) == doctest::Approx(0.0));
}

TEST_CASE("width density of an ellipse") {
  const GaugeDensity d = d1(ConvexBody::ellipsoid(diag({4, 1})));
  Mat e(2, 1);
  e << 1, 0;
  CHECK(d.gauge(e) == doctest::Approx(4.0));
  CHECK(d(3.0 * e) == doctest::Approx(12.0));
}

TEST_CASE("normal measure chi matches the width") {
  const ConvexBody e = ConvexBody::ellipsoid(diag({4, 1}));
  const NormalMeasure1 mu = NormalMeasure1::of_body(e, 32);
  Vec v(2);
  v << 0.3, -0.7;
  CHECK(mu.chi(v) == doctest::Approx(d1(e)(v)).epsilon(1e-8));
  const NormalMeasure1 seg = NormalMeasure1::of_body(ConvexBody::segment(Vec::Unit(2, 0)));
  Vec w(2);
  w << 0.0, 1.0;
  CHECK(seg.chi(w) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("importance sampling reproduces chi") {
  const NormalMeasure1 mu = NormalMeasure1::of_body(ConvexBody::ellipsoid(diag({4, 1})) +
                                                    ConvexBody::segment(Vec::Unit(2, 1)), 32);
  Vec v(2);
  v << 1.0, 0.5;
  std::mt19937_64 rng(5);
  double sum = 0.0;
  const int draws = 200000;
  for (int i = 0; i < draws; ++i) {
    const auto d = mu.draw(rng);
    sum += d.weight * std::abs(d.normal.dot(v));
  }
  CHECK(sum / draws == doctest::Approx(mu.chi(v)).epsilon(0.01));
}

TEST_CASE("alesker identity residuals") {
  CHECK(alesker_identity_residual(ConvexBody::ball(2)) < 1e-12);
  CHECK(alesker_identity_residual(ConvexBody::ellipsoid(diag({4, 1})), 32) < 1e-6);
  CHECK(alesker_identity_residual(ConvexBody::ellipsoid(diag({4, 1, 1})), 16) < 1e-3);
  CHECK_THROWS_AS(alesker_identity(ConvexBody::segment(Vec::Unit(2, 0))), Error);
}

TEST_CASE("haar2 sphere identity") {
  Mat d = Mat::Zero(3, 2);
  d(0, 0) = 1;
  d(1, 1) = 1;
  const IdentityReport r = haar2_check(ConvexBody::ellipsoid(diag({4, 1, 1})), d, 16);
  CHECK(r.rhs == doctest::Approx(4 * kPi).epsilon(1e-14));
  CHECK(r.relative_deviation() < 1e-3);
}

TEST_CASE("region geometry") {
  const Region r = Region::unit_cube(2);
  CHECK(r.volume() == doctest::Approx(1.0));
  CHECK(r.radius() == doctest::Approx(std::sqrt(0.5)));
  CHECK_THROWS_AS(Region::parallelotope(Vec::Zero(2), Mat(2, 0)), Error);
}

TEST_CASE("density product of two disks") {
  const std::vector<ConvexBody> bodies{ConvexBody::ball(2), ConvexBody::ball(2)};
  MonteCarloOptions mc;
  mc.samples = 200000;
  const IdentityReport r = verify_product_identity(bodies, Region::unit_cube(2), 0.05, mc);
  CHECK(r.rhs == doctest::Approx(2 * kPi).epsilon(1e-9));
  CHECK(r.pass);
}

TEST_CASE("density product is independent of the worker count") {
  const NormalMeasure1 mu = NormalMeasure1::of_body(ConvexBody::ball(2));
  const std::vector<NormalMeasure1> factors{mu, mu};
  MonteCarloOptions a;
  a.samples = 100000;
  a.workers = 1;
  MonteCarloOptions b = a;
  b.workers = 3;
  CHECK(density_product_mc(factors, Region::unit_cube(2), a).value ==
        density_product_mc(factors, Region::unit_cube(2), b).value);
}

TEST_CASE("omega for one circle") {
  const std::vector<int> dims{2};
  Mat theta(2, 1);
  theta << 1, 0;
  MonteCarloOptions mc;
  mc.samples = 200000;
  const IdentityReport r = verify_crofton_product(dims, theta, 0.05, mc);
  CHECK(r.rhs == doctest::Approx(1 / kPi).epsilon(0.02));
  CHECK(r.pass);
}
