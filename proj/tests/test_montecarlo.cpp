#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "crofton/error.hpp"
#include "crofton/function_space.hpp"
#include "crofton/montecarlo.hpp"
#include "crofton/predictor.hpp"
#include "crofton/report.hpp"

using namespace crofton;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<FunctionSpace> spaces(const std::string& manifold, const std::string& list) {
  const Manifold m = Manifold::parse(manifold);
  std::vector<FunctionSpace> out;
  for (const FunctionSpace& s : parse_spaces(m, list)) out.push_back(orthonormalize(s));
  return out;
}

}  // namespace

TEST_CASE("unit samples lie on the sphere") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) CHECK(sample_unit(5, rng).norm() == doctest::Approx(1.0).epsilon(1e-12));
  std::mt19937_64 a(4), b(4);
  CHECK(sample_unit(3, a) == sample_unit(3, b));
}

TEST_CASE("unit samples in the plane have uniform angle") {
  std::mt19937_64 rng(21);
  const int n = 10000;
  std::vector<double> angles;
  for (int i = 0; i < n; ++i) {
    const Vec v = sample_unit(2, rng);
    angles.push_back((std::atan2(v(1), v(0)) + kPi) / (2 * kPi));
  }
  std::sort(angles.begin(), angles.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) d = std::max({d, std::abs(angles[i] - double(i) / n), std::abs(angles[i] - double(i + 1) / n)});
  // Kolmogorov-Smirnov critical value at p = 0.01
  CHECK(d < 1.63 / std::sqrt(double(n)));
}

TEST_CASE("zero counts on the circle") {
  CHECK(count_zeros_1d([](double t) { return std::cos(3 * t); }).count == 6);
  CHECK(count_zeros_1d([](double) { return 1.0; }).count == 0);
  CHECK(count_zeros_1d([](double t) { return 0.3 * std::cos(5 * t) - 1.7 * std::sin(5 * t); }).count == 10);
}

TEST_CASE("tangential zeros are suspect") {
  const ZeroCount z = count_zeros_1d([](double t) { return 1.0 - std::cos(t); });
  CHECK(z.suspect);
}

TEST_CASE("zero counts on the torus and the sphere") {
  const Manifold t2 = Manifold::torus(2);
  const FieldPair torus = [](const Vec& p, Eigen::Vector2d& v, Mat& g) {
    v << p(0), p(2);
    g = Mat::Zero(2, 4);
    g(0, 0) = 1;
    g(1, 2) = 1;
  };
  CHECK(count_zeros_2d(torus, t2).count == 4);

  const FieldPair sphere = [](const Vec& p, Eigen::Vector2d& v, Mat& g) {
    v << p(2), p(0);
    g = Mat::Zero(2, 3);
    g(0, 2) = 1;
    g(1, 0) = 1;
  };
  const ZeroCount z = count_zeros_2d(sphere, Manifold::sphere2());
  CHECK(z.count == 2);
  CHECK_FALSE(z.suspect);
}

TEST_CASE("identical fields are degenerate") {
  const FieldPair same = [](const Vec& p, Eigen::Vector2d& v, Mat& g) {
    v << p(2), p(2);
    g = Mat::Zero(2, 3);
    g(0, 2) = 1;
    g(1, 2) = 1;
  };
  CHECK(count_zeros_2d(same, Manifold::sphere2()).suspect);
}

TEST_CASE("torus estimates are exact") {
  for (const char* m : {"torus1", "torus2", "torus3"}) {
    const Manifold man = Manifold::parse(m);
    std::string list = "linear";
    for (int i = 1; i < man.dim(); ++i) list += ", linear";
    const ZeroCountEstimate e = estimate(spaces(m, list), 100, 17);
    CHECK(e.mean == std::pow(2.0, man.dim()));
    CHECK(e.stderr_ == 0.0);
    CHECK(e.histogram.size() == 1);
  }
}

TEST_CASE("single-frequency circle estimates are exact") {
  const ZeroCountEstimate e = estimate(spaces("circle", "eig 16"), 10000, 2);
  CHECK(e.mean == 8.0);
  CHECK(e.stderr_ == 0.0);
}

TEST_CASE("estimates do not depend on the worker count") {
  const std::vector<FunctionSpace> s = spaces("torus2", "eig 2, eig 1");
  EstimateOptions one;
  one.workers = 1;
  EstimateOptions three;
  three.workers = 3;
  CHECK(estimate(s, 20, 5, one).counts == estimate(s, 20, 5, three).counts);
}

TEST_CASE("sign flips leave zero counts unchanged") {
  const auto f = [](double t) { return std::cos(2 * t) + 0.4 * std::sin(3 * t); };
  CHECK(count_zeros_1d(f).count == count_zeros_1d([&](double t) { return -f(t); }).count);
}

TEST_CASE("sphere estimate agrees with the prediction") {
  const std::vector<FunctionSpace> s = spaces("s2", "eig 6, eig 6");
  const ZeroCountEstimate e = estimate(s, 100, 7);
  CHECK(e.mean >= 0.0);
  const CompareVerdict v = report_compare(predict(s), e);
  CHECK(v.pass);
  CHECK(e.suspect_samples <= 1);
}

TEST_CASE("mismatched spaces fail the comparison") {
  const std::vector<FunctionSpace> s = spaces("s2", "eig 6, eig 6");
  const CompareVerdict v = report_compare(predict(spaces("s2", "eig 20, eig 20")), estimate(s, 100, 7));
  CHECK_FALSE(v.pass);
}

TEST_CASE("estimates need matching space counts") {
  CHECK_THROWS_AS(estimate(spaces("s2", "eig 2"), 10, 1), Error);
}
