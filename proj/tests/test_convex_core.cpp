#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crofton/constants.hpp"
#include "crofton/convex_body.hpp"
#include "crofton/error.hpp"
#include "crofton/volume.hpp"

using namespace crofton;

namespace {

constexpr double kPi = std::numbers::pi;

Mat diag(std::initializer_list<double> d) {
  Vec v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

Vec vec(std::initializer_list<double> d) {
  Vec v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v;
}

ConvexBody random_ellipsoid(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  return ConvexBody::ellipsoid(a * a.transpose() + 0.1 * Mat::Identity(n, n));
}

}  // namespace

TEST_CASE("sphere and ball constants") {
  CHECK(sphere_volume(1) == doctest::Approx(2 * kPi).epsilon(1e-15));
  CHECK(sphere_volume(2) == doctest::Approx(4 * kPi).epsilon(1e-15));
  CHECK(ball_volume(3) == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
  CHECK(factorial(5) == 120.0);
  for (int p = 1; p <= 6; ++p) {
    const DimensionalConstants k = DimensionalConstants::of(p);
    CHECK(std::abs(k.identity_residual()) <= 1e-12 * k.v_p * k.sigma_p);
  }
}

TEST_CASE("support functions") {
  const ConvexBody e = ConvexBody::ellipsoid(diag({4, 1}));
  CHECK(e.support(vec({1, 0})) == doctest::Approx(2.0));
  CHECK(e.support(vec({0, -1})) == doctest::Approx(1.0));
  const ConvexBody s = ConvexBody::segment(vec({0.5, 0}));
  CHECK(s.support(vec({-1, 0})) == doctest::Approx(0.5));
  const ConvexBody sum = ConvexBody::ball(2) + s;
  CHECK(sum.support(vec({1, 0})) == doctest::Approx(1.5));
  CHECK((2.0 * sum).support(vec({0, 1})) == doctest::Approx(2.0));
}

TEST_CASE("body validation") {
  CHECK_THROWS_AS(ConvexBody::ellipsoid(diag({1, -1})), Error);
  CHECK_THROWS_AS(ConvexBody::ball(5), Error);
  CHECK_THROWS_AS(ConvexBody::ball(2) + ConvexBody::ball(3), Error);
}

TEST_CASE("body json round trip") {
  const ConvexBody b = ConvexBody::ellipsoid(diag({4, 1})) + ConvexBody::segment(vec({1, 1}));
  const ConvexBody c = body_from_json(to_json(b));
  for (const Vec& u : direction_grid(2, 16)) CHECK(c.support(u) == doctest::Approx(b.support(u)).epsilon(1e-14));
}

TEST_CASE("closed-form volumes") {
  CHECK(volume(ConvexBody::ball(2, 2.0)) == doctest::Approx(4 * kPi).epsilon(1e-12));
  CHECK(volume(ConvexBody::ball(3)) == doctest::Approx(4 * kPi / 3).epsilon(1e-12));
  CHECK(volume(ConvexBody::ellipsoid(diag({4, 9, 1}))) == doctest::Approx(8 * kPi).epsilon(1e-12));
  const ConvexBody z = ConvexBody::zonotope(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})});
  CHECK(volume(z) == doctest::Approx(12.0).epsilon(1e-12));
}

TEST_CASE("Minkowski sum volumes") {
  const ConvexBody stadium = ConvexBody::ball(2) + ConvexBody::segment(vec({1, 0}));
  CHECK(volume(stadium) == doctest::Approx(kPi + 4.0).epsilon(1e-9));
  CHECK(volume(stadium, VolumeMethod::MembershipGrid) == doctest::Approx(kPi + 4.0).epsilon(5e-3));
  const ConvexBody two_disks = ConvexBody::ball(2) + ConvexBody::ball(2, 0.5);
  CHECK(volume(two_disks) == doctest::Approx(kPi * 2.25).epsilon(1e-9));
}

TEST_CASE("mixed volumes") {
  const ConvexBody ellipse = ConvexBody::ellipsoid(diag({4, 1}));
  const ConvexBody disk = ConvexBody::ball(2);
  const ConvexBody pair[] = {ellipse, disk};
  CHECK(mixed_volume(pair) == doctest::Approx(4.8442241102738386).epsilon(1e-9));

  Mat q(2, 2);
  q << 2, 0.5, 0.5, 1;
  const ConvexBody tilted[] = {ellipse, ConvexBody::ellipsoid(q)};
  CHECK(mixed_volume(tilted) == doctest::Approx(5.36144878515).epsilon(1e-8));

  const ConvexBody segments[] = {ConvexBody::segment(vec({0.5, 0, 0})), ConvexBody::segment(vec({0, 0.5, 0})),
                                 ConvexBody::segment(vec({0, 0, 0.5}))};
  CHECK(mixed_volume(segments) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  const ConvexBody balls[] = {ConvexBody::ball(3, 1.0), ConvexBody::ball(3, 2.0), ConvexBody::ball(3, 0.5)};
  CHECK(mixed_volume(balls) == doctest::Approx(4 * kPi / 3).epsilon(1e-9));

  const ConvexBody self[] = {ellipse, ellipse};
  CHECK(mixed_volume(self) == doctest::Approx(volume(ellipse)).epsilon(1e-9));
}

TEST_CASE("mixed volume is 2V of the stadium against the disk") {
  const ConvexBody stadium = ConvexBody::ball(2) + ConvexBody::segment(vec({1, 0}));
  const ConvexBody pair[] = {stadium, ConvexBody::ball(2)};
  CHECK(2 * mixed_volume(pair) == doctest::Approx(10.283185307179586).epsilon(1e-9));
}

TEST_CASE("mixed volume needs matching dimension") {
  const ConvexBody bad[] = {ConvexBody::ball(2), ConvexBody::ball(3)};
  CHECK_THROWS_AS(mixed_volume(bad), Error);
}

TEST_CASE("projection volume") {
  Mat frame = Mat::Zero(3, 2);
  frame(0, 0) = 1;
  frame(1, 1) = 1;
  CHECK(projection_volume(ConvexBody::ellipsoid(diag({4, 9, 1})), frame) == doctest::Approx(6 * kPi).epsilon(1e-9));
}

TEST_CASE("Alexandrov-Fenchel holds for random ellipsoids") {
  std::mt19937_64 rng(11);
  for (int n : {2, 3}) {
    for (int t = 0; t < 10; ++t) {
      std::vector<ConvexBody> bodies;
      for (int i = 0; i < n; ++i) bodies.push_back(random_ellipsoid(n, rng));
      CHECK(check_alexandrov_fenchel(bodies).holds);
    }
  }
}

TEST_CASE("support dominance") {
  CHECK(support_dominates(ConvexBody::ball(2, 2.0), ConvexBody::ellipsoid(diag({4, 1}))));
  CHECK_FALSE(support_dominates(ConvexBody::ball(2), ConvexBody::ellipsoid(diag({4, 1}))));
}
