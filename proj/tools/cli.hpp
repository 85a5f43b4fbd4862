#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace mw::cli {

// every option of every subcommand; unset fields keep their defaults
struct JobConfig {
  std::string command;  // local, global, zeros, verify, weil-index
  std::string format;   // json or csv; empty picks the command default
  std::string output;   // empty: stdout

  // local factor
  std::string field;  // real, hermitian, square, rn, qp, qpn
  int p = 0;
  std::vector<std::string> a, b;
  int n = 0;  // character exponent over C, dimension for rn
  bool odd = false;
  bool with_oracle = false;

  // global spec: "reference" or "custom"
  std::string global;
  std::string a_inf = "1", b_inf = "0";
  std::vector<std::string> places;  // p:a:b
  std::vector<std::string> chi;     // p:e:t

  // evaluation points: "re" or "re,im", grid "re0,re1,nre,im0,im1,nim"
  std::vector<std::string> s;
  std::string grid;

  // zero regions
  double re0 = -0.1, re1 = 1.1;
  double imin = 1, imax = 30;
  double step = 0.05;
  double accept_rel = 1e-10;

  std::string suite = "all";

  nlohmann::json to_json() const;
  // throws ConfigError on unknown keys or wrong types
  static JobConfig from_json(const nlohmann::json& j);
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exit status: 0 ok, 1 numeric failure, 2 configuration error
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mw::cli
