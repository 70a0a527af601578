#include <doctest.h>

#include <cmath>
#include <numbers>

#include "crofton/error.hpp"
#include "crofton/function_space.hpp"
#include "crofton/predictor.hpp"

using namespace crofton;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<FunctionSpace> spaces(const std::string& manifold, const std::string& list) {
  const Manifold m = Manifold::parse(manifold);
  std::vector<FunctionSpace> out;
  for (const FunctionSpace& s : parse_spaces(m, list)) out.push_back(orthonormalize(s));
  return out;
}

FunctionSpace skewed(const FunctionSpace& s) {
  Mat c = s.coefficients();
  c.row(0) *= 3.0;
  return s.with_coefficients(c);
}

}  // namespace

TEST_CASE("tori with coordinate spaces") {
  CHECK(predict(spaces("torus1", "linear")).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(predict(spaces("torus2", "linear, linear")).value == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(predict(spaces("torus3", "linear, linear, linear")).value == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("circle eigenspaces count 2k zeros") {
  CHECK(predict(spaces("circle", "eig 9")).value == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("sphere with linear functionals") {
  CHECK(predict(spaces("s2", "linear, linear")).value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("sphere eigenspaces match the closed form") {
  const Manifold s2 = Manifold::sphere2();
  const double pairs[][2] = {{2, 2}, {2, 6}, {6, 6}, {12, 12}};
  for (const auto& p : pairs) {
    const std::string list = "eig " + std::to_string(int(p[0])) + ", eig " + std::to_string(int(p[1]));
    const double lambdas[] = {p[0], p[1]};
    const double expected = gichev_closed_form(lambdas, 2, s2.volume());
    CHECK(expected == doctest::Approx(std::sqrt(p[0] * p[1])).epsilon(1e-12));
    CHECK(predict(spaces("s2", list)).value == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("prediction is invariant under rescaled scalar products") {
  std::vector<FunctionSpace> s = spaces("s2", "eig 6, eig 2");
  const double base = predict(s).value;
  s[0] = s[0].with_coefficients(2.5 * s[0].coefficients());
  CHECK(predict(s).value == doctest::Approx(base).epsilon(1e-10));
}

TEST_CASE("quadrature refinement is stable") {
  const std::vector<FunctionSpace> s = spaces("s2", "eig 6, eig 12");
  PredictOptions coarse;
  coarse.resolution = 25;
  PredictOptions fine;
  fine.resolution = 50;
  const double a = predict(s, coarse).value;
  const double b = predict(s, fine).value;
  CHECK(std::abs(a - b) / b < 1e-6);
}

TEST_CASE("upper bound") {
  const double vol = 4 * kPi;
  CHECK(upper_bound(6, 2, vol) == doctest::Approx(6.0));
  CHECK(predict(spaces("s2", "eig 12, eig 12")).value <= upper_bound(12, 2, vol) * (1 + 1e-6));
  CHECK(predict(spaces("torus2", "eig 1, eig 1")).value <= upper_bound(1, 2, 4 * kPi * kPi) * (1 + 1e-6));
  CHECK_THROWS_AS(upper_bound(-1, 2, vol), Error);
}

TEST_CASE("space count must match the dimension") {
  CHECK_THROWS_AS(predict(spaces("s2", "eig 2")), Error);
}

TEST_CASE("homogeneity detection") {
  CHECK(is_invariant(spaces("s2", "eig 6")[0]));
  CHECK(is_invariant(spaces("torus2", "custom 1:0 0:2")[0]));
  CHECK_FALSE(is_invariant(skewed(spaces("torus2", "eig 1")[0])));
}

TEST_CASE("hodge inequalities on the sphere hold with equality") {
  const HodgeReport r = hodge_report(spaces("s2", "eig 2, eig 12"));
  CHECK(r.holds);
  CHECK(r.corollary_holds);
  CHECK(r.equality_expected);
  CHECK(r.equality);
  CHECK(r.pass);
}

TEST_CASE("hodge report without invariance is advisory") {
  std::vector<FunctionSpace> s = spaces("torus2", "eig 1, eig 2");
  s[0] = skewed(s[0]);
  const HodgeReport r = hodge_report(s);
  CHECK(r.advisory == "not-invariant");
  CHECK(r.pass);
}
