#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using namespace mw::cli;
using nlohmann::json;

namespace {
int call(std::vector<std::string> args, std::string& out, std::string& err) {
  args.insert(args.begin(), "mellin");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream o, e;
  const int rc = main_with_args(int(argv.size()), argv.data(), o, e);
  out = o.str();
  err = e.str();
  return rc;
}
}  // namespace

TEST_CASE("local p-adic value") {
  std::string out, err;
  REQUIRE(call({"local", "--field", "qp", "--p", "5", "--a", "1", "--b", "0", "--s", "2"}, out, err) == 0);
  const json j = json::parse(out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "local");
  CHECK(j["results"][0]["value"][0].get<double>() == doctest::Approx(25.0 / 24).epsilon(1e-15));
  CHECK(j["results"][0]["value"][1].get<double>() == 0.0);
}

TEST_CASE("zeros of the reference spec") {
  std::string out, err, again;
  REQUIRE(call({"zeros", "--global", "reference", "--imax", "30"}, out, err) == 0);
  std::istringstream is(out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "re,im,multiplicity,certified,method,class,place");
  int global = 0, local2 = 0;
  double last_im = -1;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string re, im, mult, cert, method, cls, place;
    std::getline(ls, re, ',');
    std::getline(ls, im, ',');
    std::getline(ls, mult, ',');
    std::getline(ls, cert, ',');
    std::getline(ls, method, ',');
    std::getline(ls, cls, ',');
    std::getline(ls, place, ',');
    CHECK(std::abs(std::stod(re) - 0.5) < 1e-6);
    CHECK(std::stod(im) > last_im);
    last_im = std::stod(im);
    CHECK(cert == "true");
    global += cls == "global";
    local2 += cls == "local" && place == "2";
  }
  CHECK(global == 3);
  CHECK(local2 == 6);
  REQUIRE(call({"zeros", "--global", "reference", "--imax", "30"}, again, err) == 0);
  CHECK(again == out);
}

TEST_CASE("weil index of the reference spec") {
  std::string out, err;
  REQUIRE(call({"weil-index", "--global", "reference"}, out, err) == 0);
  const json j = json::parse(out);
  CHECK(j["results"].size() == 2);
  CHECK(j["product"][0].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(j["product"][1].get<double>()) < 1e-15);
}

TEST_CASE("global values carry the factorization") {
  std::string out, err;
  REQUIRE(call({"global", "--s", "0.3,5", "--s", "2"}, out, err) == 0);
  const json j = json::parse(out);
  REQUIRE(j["results"].size() == 2);
  for (const auto& r : j["results"]) {
    CHECK(r["fe_residual"].get<double>() < 1e-9);
    CHECK(r["factors"].size() == 2);
    const double dv = std::hypot(r["value"][0].get<double>() - r["closed_form"][0].get<double>(),
                                 r["value"][1].get<double>() - r["closed_form"][1].get<double>());
    CHECK(dv < 1e-9);
  }
}

TEST_CASE("configuration errors exit with 2") {
  std::string out, err;
  CHECK(call({"local", "--field", "qp", "--p", "4", "--a", "1", "--s", "2"}, out, err) == 2);
  CHECK(call({"local", "--field", "real", "--a", "1", "--s", "x"}, out, err) == 2);
  CHECK(call({"local", "--field", "qp", "--p", "3", "--a", "1"}, out, err) == 2);
  CHECK(call({"local", "--bogus"}, out, err) == 2);
  CHECK(call({"global", "--global", "custom", "--chi", "3:2:3", "--s", "2"}, out, err) == 2);
  CHECK(call({"verify", "--suite", "12"}, out, err) == 2);
  CHECK(call({}, out, err) == 2);
}

TEST_CASE("config round trip") {
  JobConfig c;
  c.command = "local";
  c.field = "qp";
  c.p = 3;
  c.a = {"1"};
  c.b = {"1/9"};
  c.s = {"0.5,2"};
  const json j = c.to_json();
  CHECK(JobConfig::from_json(j).to_json() == j);
  json bad = j;
  bad["tolerance"] = 1;
  CHECK_THROWS_AS(JobConfig::from_json(bad), ConfigError);
  bad = j;
  bad["p"] = "three";
  CHECK_THROWS_AS(JobConfig::from_json(bad), ConfigError);
}

TEST_CASE("verify runs selected criteria") {
  std::string out, err;
  CHECK(call({"verify", "--suite", "1,3"}, out, err) == 0);
  CHECK(out.find("PASS criterion 1") != std::string::npos);
  CHECK(out.find("PASS criterion 3") != std::string::npos);
}
