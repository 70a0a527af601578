#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "crofton/cli.hpp"
#include "crofton/config.hpp"
#include "crofton/error.hpp"
#include "crofton/report.hpp"

using namespace crofton;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "crofton");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("config round trip") {
  RunConfig c;
  c.mode = "verify";
  c.manifold = "s2";
  c.spaces = {"eig 6", "eig lambda=12"};
  c.identity = "product";
  c.bodies = "disk, ellipsoid[4,1], 2*disk+segment[1,0]";
  c.region = "parallelotope[0,0;1,0;0,1]";
  c.samples = 1000000;
  c.seed = 42;
  c.tol = 0.02;
  c.bandwidth = 32;
  c.theta = "1,0,0,0;0,0,1,0";
  c.invert = true;
  c.report = "out.json";
  CHECK(parse_config(serialize_config(c)) == c);
}

TEST_CASE("list splitting respects brackets") {
  const auto parts = split_list("disk, ellipsoid[4,1], zonotope[1,0;0,1]");
  REQUIRE(parts.size() == 3);
  CHECK(parts[1] == "ellipsoid[4,1]");
}

TEST_CASE("body and region parsing") {
  CHECK(parse_body("disk").support(Vec::Unit(2, 0)) == doctest::Approx(1.0));
  CHECK(parse_body("ellipsoid[4,1]").support(Vec::Unit(2, 0)) == doctest::Approx(2.0));
  CHECK(parse_body("disk+segment[1,0]").support(Vec::Unit(2, 0)) == doctest::Approx(2.0));
  CHECK(parse_body("2*ball3").support(Vec::Unit(3, 2)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(parse_body("cube"), Error);
  CHECK(parse_region("unit-square", 2).volume() == doctest::Approx(1.0));
  CHECK(parse_region("segment[2]", 3).dim() == 1);
  CHECK(parse_columns("1,0;0,1").cols() == 2);
}

TEST_CASE("predict on the torus") {
  const Run r = invoke({"predict", "--manifold", "torus2", "--spaces", "linear, linear"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("space count mismatch is an input error") {
  const Run r = invoke({"simulate", "--manifold", "torus2", "--spaces", "linear"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error: dimension-mismatch") == 0);
}

TEST_CASE("unknown names list the supported ones") {
  const Run m = invoke({"predict", "--manifold", "klein", "--spaces", "linear"});
  CHECK(m.code == 1);
  CHECK(m.err.find("torus") != std::string::npos);
  const Run s = invoke({"predict", "--manifold", "s2", "--spaces", "quadratic, linear"});
  CHECK(s.code == 1);
  CHECK(s.err.find("eig") != std::string::npos);
  const Run i = invoke({"verify", "--identity", "nonsense"});
  CHECK(i.code == 1);
}

TEST_CASE("unknown flags are input errors") {
  CHECK(invoke({"predict", "--frobnicate"}).code == 1);
  CHECK(invoke({}).code == 1);
}

TEST_CASE("identity failure exits with 2") {
  const Run r = invoke({"verify", "--identity", "product", "--bodies", "disk, disk", "--samples", "2000", "--tol",
                        "1e-9"});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.out)["pass"] == false);
}

TEST_CASE("constants and transform") {
  CHECK(invoke({"verify", "--identity", "constants"}).code == 0);
  const Run t = invoke({"transform", "--dim", "2", "--coefficients", "1,0,0"});
  CHECK(t.code == 0);
  const auto c = nlohmann::json::parse(t.out)["coefficients"];
  CHECK(c[0].get<double>() == doctest::Approx(0.63661977236758127).epsilon(1e-14));
  const Run back = invoke({"transform", "--dim", "2", "--invert", "--coefficients", "0.63661977236758127,0,0"});
  CHECK(nlohmann::json::parse(back.out)["coefficients"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(invoke({"transform", "--dim", "2", "--coefficients", "1,0"}).code == 1);
}

TEST_CASE("flags override the config file and reports are reproducible") {
  const auto dir = std::filesystem::temp_directory_path() / "crofton_cli_test";
  std::filesystem::create_directories(dir);
  RunConfig c;
  c.mode = "simulate";
  c.manifold = "torus2";
  c.spaces = {"eig 1", "eig 1"};
  c.samples = 5;
  c.seed = 3;
  std::ofstream(dir / "run.ini") << serialize_config(c);

  const auto report = (dir / "report.json").string();
  const auto csv = (dir / "samples.csv").string();
  const Run a = invoke({"simulate", "--config", (dir / "run.ini").string(), "--samples", "8", "--report", report,
                        "--csv", csv});
  REQUIRE(a.code == 0);
  const auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["samples"] == 8);
  std::ifstream in(report);
  const auto saved = nlohmann::json::parse(in);
  CHECK(without_timestamp(saved) == without_timestamp(ja));
  std::ifstream rows(csv);
  std::string header;
  std::getline(rows, header);
  CHECK(header.find("count") != std::string::npos);

  const Run b = invoke({"simulate", "--config", (dir / "run.ini").string(), "--samples", "8"});
  CHECK(without_timestamp(nlohmann::json::parse(b.out)).dump() == without_timestamp(ja).dump());
  std::filesystem::remove_all(dir);
}
