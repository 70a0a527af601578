#include <doctest.h>

#include <cmath>
#include <numbers>

#include "crofton/error.hpp"
#include "crofton/function_space.hpp"
#include "crofton/manifold.hpp"
#include "crofton/point_geometry.hpp"
#include "crofton/volume.hpp"

using namespace crofton;

namespace {

constexpr double kPi = std::numbers::pi;

Vec vec(std::initializer_list<double> d) {
  Vec v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("manifold parsing") {
  CHECK(Manifold::parse("s1").dim() == 1);
  CHECK(Manifold::parse("torus3").dim() == 3);
  CHECK(Manifold::parse("t2").ambient_dim() == 4);
  CHECK(Manifold::parse("s2xs1").dim() == 3);
  CHECK(Manifold::parse("s2").is_torus() == false);
  CHECK_THROWS_AS(Manifold::parse("klein"), Error);
}

TEST_CASE("manifold volumes and quadrature") {
  for (const char* name : {"circle", "torus2", "s2", "s2xs1"}) {
    const Manifold m = Manifold::parse(name);
    const Manifold::Quadrature q = m.quadrature();
    double total = 0.0;
    for (double w : q.weights) total += w;
    CHECK(total == doctest::Approx(m.volume()).epsilon(1e-12));
  }
  CHECK(Manifold::sphere2().volume() == doctest::Approx(4 * kPi));
}

TEST_CASE("chart round trip and tangent frames") {
  const Manifold m = Manifold::parse("s2xs1");
  const Vec chart = vec({0.7, 1.1, 2.5});
  const Vec p = m.embed(chart);
  CHECK((m.embed(m.chart_of(p)) - p).norm() < 1e-12);
  const Mat t = m.tangent_frame(p);
  CHECK((t.transpose() * t - Mat::Identity(3, 3)).norm() < 1e-12);
  CHECK((m.retract(2.0 * p) - p).norm() < 1e-12);
}

TEST_CASE("eigenspace dimensions") {
  const Manifold s2 = Manifold::sphere2();
  CHECK(FunctionSpace::eigenspace(s2, 6).size() == 5);
  CHECK(FunctionSpace::eigenspace(s2, 12).size() == 7);
  CHECK(FunctionSpace::eigenspace(Manifold::circle(), 9).size() == 2);
  CHECK(FunctionSpace::eigenspace(Manifold::torus(2), 5).size() == 8);
  CHECK_THROWS_AS(FunctionSpace::eigenspace(s2, 5), Error);
}

TEST_CASE("descriptor parsing") {
  const Manifold t2 = Manifold::torus(2);
  CHECK(FunctionSpace::parse(t2, "linear", 1).single_factor() == 1);
  CHECK(FunctionSpace::parse(t2, "linear factor=0").single_factor() == 0);
  CHECK(FunctionSpace::parse(t2, "eig lambda=1").size() == 4);
  CHECK(FunctionSpace::parse(t2, "custom 1:2 2:1").size() == 4);
  CHECK_THROWS_AS(FunctionSpace::parse(t2, "quadratic"), Error);
  CHECK(parse_spaces(Manifold::sphere2(), "eig 2, eig 6").size() == 2);
}

TEST_CASE("orthonormalized spaces have identity Gram matrix") {
  const FunctionSpace s = orthonormalize(FunctionSpace::eigenspace(Manifold::sphere2(), 6));
  CHECK((s.gram_l2() - Mat::Identity(5, 5)).norm() < 1e-10);
}

TEST_CASE("theta is a unit vector") {
  const FunctionSpace s = orthonormalize(FunctionSpace::eigenspace(Manifold::sphere2(), 6));
  const Vec p = vec({0.0, 0.6, 0.8});
  CHECK(theta(s, p).norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("theta is scale invariant") {
  const FunctionSpace s = orthonormalize(FunctionSpace::eigenspace(Manifold::sphere2(), 6));
  const FunctionSpace scaled = s.with_coefficients(3.0 * s.coefficients());
  const Vec p = vec({0.36, 0.48, 0.8});
  CHECK((theta(s, p) - theta(scaled, p)).norm() < 1e-14);
}

TEST_CASE("pullback metric of the circle coordinates") {
  const FunctionSpace s = orthonormalize(FunctionSpace::linear(Manifold::circle(), std::nullopt));
  const Mat g = pullback_metric(s, vec({1.0, 0.0}));
  CHECK(g(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("F-ellipsoid of an eigenspace on the sphere is round") {
  const FunctionSpace s = orthonormalize(FunctionSpace::eigenspace(Manifold::sphere2(), 6));
  const ConvexBody e = f_ellipsoid(s, vec({0.36, 0.48, 0.8}));
  // |dtheta|^2 = lambda / n on an isotropic space
  CHECK(volume(e) == doctest::Approx(kPi * 3.0).epsilon(1e-9));
}

TEST_CASE("point geometry collects one ellipsoid per space") {
  const std::vector<FunctionSpace> spaces{orthonormalize(FunctionSpace::eigenspace(Manifold::sphere2(), 2)),
                                          orthonormalize(FunctionSpace::eigenspace(Manifold::sphere2(), 6))};
  const PointGeometry g = point_geometry(spaces, vec({0.0, 0.0, 1.0}));
  CHECK(g.metric.size() == 2);
  CHECK(g.semi_axes(1)(0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("theta needs a non-vanishing space") {
  const FunctionSpace lin = orthonormalize(FunctionSpace::linear(Manifold::sphere2(), std::nullopt));
  const FunctionSpace one = lin.with_coefficients(lin.coefficients().topRows(1));
  for (int i = 0; i < 3; ++i) {
    const Vec p = Vec::Unit(3, i);
    if (std::abs(one.values(p)(0)) < 1e-15) CHECK_THROWS_AS(theta(one, p), Error);
  }
}

TEST_CASE("finite-difference audit of analytic gradients") {
  const FunctionSpace s = orthonormalize(FunctionSpace::eigenspace(Manifold::sphere2(), 12));
  CHECK(finite_difference_audit(s, vec({0.9, 2.1}), 1e-6) < 1e-6);
}
