#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mellin/arch_zeta.hpp"
#include "mellin/global_zeta.hpp"
#include "mellin/oracle.hpp"
#include "mellin/padic_zeta.hpp"
#include "mellin/suite.hpp"

namespace mw::cli {

using nlohmann::json;

namespace {

double parse_real(const std::string& t, const char* what) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + ": not a number: " + t);
  }
  if (pos != t.size()) throw ConfigError(std::string(what) + ": not a number: " + t);
  return v;
}

int parse_int(const std::string& t, const char* what) {
  const double v = parse_real(t, what);
  if (v != std::floor(v)) throw ConfigError(std::string(what) + ": not an integer: " + t);
  return int(v);
}

// "re" or "re,im"
cplx parse_complex(const std::string& t, const char* what) {
  const auto comma = t.find(',');
  if (comma == std::string::npos) return parse_real(t, what);
  return {parse_real(t.substr(0, comma), what), parse_real(t.substr(comma + 1), what)};
}

std::vector<std::string> split(const std::string& t, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

json cj(cplx z) { return json::array({z.real(), z.imag()}); }

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<cplx> points(const JobConfig& c) {
  std::vector<cplx> out;
  for (const auto& t : c.s) out.push_back(parse_complex(t, "--s"));
  if (!c.grid.empty()) {
    const auto g = split(c.grid, ',');
    if (g.size() != 6) throw ConfigError("--grid: expected re0,re1,nre,im0,im1,nim");
    const double r0 = parse_real(g[0], "--grid"), r1 = parse_real(g[1], "--grid");
    const double i0 = parse_real(g[3], "--grid"), i1 = parse_real(g[4], "--grid");
    const int nr = parse_int(g[2], "--grid"), ni = parse_int(g[5], "--grid");
    if (nr < 1 || ni < 1) throw ConfigError("--grid: counts must be positive");
    for (int i = 0; i < nr; ++i)
      for (int k = 0; k < ni; ++k)
        out.emplace_back(nr == 1 ? r0 : r0 + (r1 - r0) * i / (nr - 1), ni == 1 ? i0 : i0 + (i1 - i0) * k / (ni - 1));
  }
  if (out.empty()) throw ConfigError("no evaluation points: give --s or --grid");
  return out;
}

DirichletCharData parse_char(const std::string& t) {
  const auto f = split(t, ':');
  if (f.size() != 3) throw ConfigError("--chi: expected p:e:t");
  const int p = parse_int(f[0], "--chi"), e = parse_int(f[1], "--chi"), k = parse_int(f[2], "--chi");
  if (!is_prime(p) || e < 1) throw ConfigError("--chi: p must be prime and e >= 1");
  return DirichletCharData::make(p, e, k);
}

std::string one(const std::vector<std::string>& v, const char* what, const std::string& dflt = "") {
  if (v.empty()) {
    if (!dflt.empty()) return dflt;
    throw ConfigError(std::string(what) + " is required");
  }
  if (v.size() != 1) throw ConfigError(std::string(what) + " takes one value for this field");
  return v.front();
}

GlobalSpec global_spec(const JobConfig& c) {
  if (c.global == "reference") {
    if (!c.places.empty() || !c.chi.empty()) throw ConfigError("--global reference takes no --place or --chi");
    return GlobalSpec::reference();
  }
  if (c.global != "custom") throw ConfigError("--global must be reference or custom");
  GlobalSpec g;
  g.f_inf = {parse_real(c.a_inf, "--a-inf"), parse_real(c.b_inf, "--b-inf")};
  g.finite[2] = PAdicSDC::standard(2);
  for (const auto& t : c.places) {
    const auto f = split(t, ':');
    if (f.size() != 3) throw ConfigError("--place: expected p:a:b");
    const int p = parse_int(f[0], "--place");
    if (!is_prime(p)) throw ConfigError("--place: p must be prime");
    g.finite[p] = PAdicSDC::make(p, PAdicRational::parse(p, f[1]), PAdicRational::parse(p, f[2]));
  }
  std::vector<DirichletCharData> parts;
  for (const auto& t : c.chi) parts.push_back(parse_char(t));
  g.chi = character_product(parts);
  return g;
}

PAdicSDC padic_sdc(int p, const std::string& a, const std::string& b) {
  if (!is_prime(p)) throw ConfigError("--p must be prime");
  return PAdicSDC::make(p, PAdicRational::parse(p, a), PAdicRational::parse(p, b));
}

UnitChar local_char(const JobConfig& c) {
  if (c.chi.empty()) return std::nullopt;
  if (c.chi.size() != 1) throw ConfigError("--chi takes one value for a local factor");
  auto chi = parse_char(c.chi.front());
  if (chi.p != c.p) throw ConfigError("--chi prime differs from --p");
  return chi;
}

struct LocalJob {
  std::function<cplx(cplx)> value;
  std::function<cplx(cplx)> oracle;
  std::function<cplx()> weil;
  std::string describe;
  double center = 0.5;
  std::optional<LocalFactor> padic;
};

LocalJob local_job(const JobConfig& c) {
  LocalJob J;
  const std::string& f = c.field;
  if (f == "real") {
    const RealSDC g{parse_real(one(c.a, "--a"), "--a"), parse_real(one(c.b, "--b", "0"), "--b")};
    const bool odd = c.odd;
    J.value = [=](cplx s) { return zeta_real(g, s, odd); };
    J.oracle = [=](cplx s) { return oracle_real_mellin(g.a, g.b, s, odd); };
    J.weil = [=] { return weil_index_real(g); };
    J.describe = std::string("real ") + (odd ? "odd" : "even");
  } else if (f == "hermitian") {
    const HermitianSDC g{parse_real(one(c.a, "--a"), "--a"), parse_complex(one(c.b, "--b", "0"), "--b")};
    const int n = c.n;
    J.value = [=](cplx s) { return zeta_complex_hermitian(g, s, n); };
    J.oracle = [=](cplx s) { return oracle_complex_hermitian(g.a, g.b, s, n); };
    J.weil = [=] { return weil_index_hermitian(g); };
    J.describe = "complex hermitian n=" + std::to_string(n);
  } else if (f == "square") {
    const SquareSDC g{parse_complex(one(c.a, "--a"), "--a"), parse_complex(one(c.b, "--b", "0"), "--b")};
    const int n = c.n;
    J.value = [=](cplx s) { return zeta_complex_square(g, s, n); };
    J.oracle = [=](cplx s) { return oracle_complex_square(g.a, g.b, s, n); };
    J.weil = [=] { return weil_index_square(g); };
    J.describe = "complex square n=" + std::to_string(n);
  } else if (f == "rn") {
    if (c.n < 1) throw ConfigError("--n: dimension must be >= 1");
    const RadialSDC g{c.n, parse_real(one(c.a, "--a"), "--a"), parse_real(one(c.b, "--b", "0"), "--b")};
    J.value = [=](cplx s) { return zeta_rn_radial(g, s); };
    J.oracle = [=](cplx s) { return oracle_rn_radial(g.n, g.a, g.bnorm, s); };
    J.weil = [] () -> cplx { throw ConfigError("weil-index: not available for rn"); };
    J.describe = "R^" + std::to_string(c.n) + " radial";
    J.center = c.n / 2.0;
  } else if (f == "qp") {
    const PAdicSDC g = padic_sdc(c.p, one(c.a, "--a"), one(c.b, "--b", "0"));
    const UnitChar chi = local_char(c);
    J.padic = padic_local_factor(g, chi);
    const LocalFactor F = *J.padic;
    J.value = [=](cplx s) { return F.eval(s); };
    J.oracle = [=](cplx s) { return oracle_padic_mellin(g, chi, s); };
    J.weil = [=] { return weil_index_padic(g); };
    J.describe = F.describe();
  } else if (f == "qpn") {
    if (c.a.empty() || c.a.size() != c.b.size()) throw ConfigError("qpn: give matching --a and --b lists");
    if (!c.chi.empty()) throw ConfigError("qpn: characters are not supported");
    std::vector<PAdicSDC> fs;
    for (size_t i = 0; i < c.a.size(); ++i) fs.push_back(padic_sdc(c.p, c.a[i], c.b[i]));
    J.padic = padic_vector_factor(fs);
    const LocalFactor F = *J.padic;
    J.value = [=](cplx s) { return F.eval(s); };
    J.oracle = [=](cplx s) { return oracle_padic_vector(fs, s); };
    J.weil = [=] {
      cplx g = 1.0;
      for (const auto& x : fs) g *= weil_index_padic(x);
      return g;
    };
    J.describe = F.describe();
    J.center = F.critical_re();
  } else {
    throw ConfigError("--field must be one of real, hermitian, square, rn, qp, qpn");
  }
  return J;
}

struct Emit {
  json results = json::array();
  json extra = json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

void write(const JobConfig& c, const Emit& e, std::ostream& out) {
  std::ostringstream os;
  if (c.format == "csv") {
    for (size_t i = 0; i < e.csv_header.size(); ++i) os << (i ? "," : "") << e.csv_header[i];
    os << "\n";
    for (const auto& row : e.csv_rows) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
  } else {
    json j = {{"schema_version", 1}, {"command", c.command}, {"inputs", c.to_json()}, {"results", e.results}};
    for (auto it = e.extra.begin(); it != e.extra.end(); ++it) j[it.key()] = it.value();
    os << j.dump(2) << "\n";
  }
  if (c.output.empty()) {
    out << os.str();
  } else {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + c.output);
    f << os.str();
  }
}

int cmd_local(const JobConfig& c, Emit& e) {
  const LocalJob J = local_job(c);
  e.extra["factor"] = J.describe;
  e.csv_header = {"re_s", "im_s", "re", "im"};
  if (c.with_oracle) e.csv_header.insert(e.csv_header.end(), {"oracle_re", "oracle_im"});
  for (cplx s : points(c)) {
    const cplx v = J.value(s);
    json r = {{"s", cj(s)}, {"value", cj(v)}};
    std::vector<std::string> row{g17(s.real()), g17(s.imag()), g17(v.real()), g17(v.imag())};
    if (c.with_oracle) {
      const cplx o = J.oracle(s);
      r["oracle"] = cj(o);
      r["oracle_abs_diff"] = std::abs(o - v);
      row.push_back(g17(o.real()));
      row.push_back(g17(o.imag()));
    }
    e.results.push_back(r);
    e.csv_rows.push_back(row);
  }
  return 0;
}

int cmd_global(const JobConfig& c, Emit& e) {
  const GlobalSpec spec = global_spec(c);
  const GlobalFactorization G = factorize(spec);
  e.extra["spec"] = spec.str();
  e.csv_header = {"re_s", "im_s", "re", "im", "fe_residual"};
  for (cplx s : points(c)) {
    const cplx v = G.eval(s);
    const double fe = global_fe_residual(spec, s);
    json factors = json::array();
    factors.push_back({{"place", "inf"}, {"value", cj(G.arch_value(s))}});
    for (const auto& pl : G.places)
      factors.push_back({{"place", pl.name()}, {"ramified", pl.ramified}, {"value", cj(pl.local.eval(s))}});
    json r = {{"s", cj(s)}, {"value", cj(v)}, {"fe_residual", fe}, {"factors", factors}};
    if (c.global == "reference") r["closed_form"] = cj(xi_f_reference(s));
    e.results.push_back(r);
    e.csv_rows.push_back({g17(s.real()), g17(s.imag()), g17(v.real()), g17(v.imag()), g17(fe)});
  }
  return 0;
}

int cmd_zeros(const JobConfig& c, Emit& e, std::ostream& err) {
  if (!(c.imax > c.imin)) throw ConfigError("--imax must exceed --imin");
  LineScanOptions opt;
  opt.accept_rel = c.accept_rel;
  std::vector<ZeroReport> zs;
  bool complete = true;
  if (!c.global.empty()) {
    if (!c.field.empty()) throw ConfigError("zeros: give either --global or --field");
    const auto scan = scan_global_zeros(global_spec(c), c.re0, c.re1, c.imin, c.imax, c.step, opt);
    zs = scan.zeros;
    complete = scan.complete;
    e.extra["winding_total"] = scan.winding_total;
  } else {
    const LocalJob J = local_job(c);
    const std::string place = J.padic ? std::to_string(c.p) : "inf";
    if (J.padic) {
      zs = exp_poly_roots_in(*J.padic, c.imin, c.imax);
    } else if (c.field == "real" || c.field == "rn") {
      zs = line_zeros(J.value, J.center, c.imin, c.imax, c.step, opt);
      const int w = winding_count_tiled(J.value, J.center - 0.4, J.center + 0.4, c.imin, c.imax);
      int m = 0;
      for (const auto& z : zs) m += z.multiplicity;
      complete = m == w;
      e.extra["winding_total"] = w;
    } else {
      throw ConfigError("zeros: field must be real, rn, qp or qpn");
    }
    for (auto& z : zs) {
      z.cls = "local";
      z.place = place;
    }
  }
  sort_zeros(zs);
  e.extra["complete"] = complete;
  e.csv_header = {"re", "im", "multiplicity", "certified", "method", "class", "place"};
  bool certified = true;
  for (const auto& z : zs) {
    certified = certified && z.certified;
    e.results.push_back({{"s", cj(z.location)},
                         {"multiplicity", z.multiplicity},
                         {"certified", z.certified},
                         {"method", method_name(z.method)},
                         {"class", z.cls},
                         {"place", z.place},
                         {"residual", z.residual}});
    e.csv_rows.push_back({g17(z.location.real()), g17(z.location.imag()), std::to_string(z.multiplicity),
                          z.certified ? "true" : "false", method_name(z.method), z.cls, z.place});
  }
  if (!complete) err << "zeros: winding count disagrees with the located zeros\n";
  if (!certified) err << "zeros: uncertified zero in the output\n";
  return complete && certified ? 0 : 1;
}

int cmd_verify(const JobConfig& c, Emit& e, std::ostream& out, std::ostream& err) {
  std::vector<int> ids;
  if (c.suite == "all") {
    ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  } else {
    for (const auto& t : split(c.suite, ',')) {
      const int id = parse_int(t, "--suite");
      if (id < 1 || id > 9) throw ConfigError("--suite: criteria are numbered 1..9");
      ids.push_back(id);
    }
  }
  std::string failed;
  e.csv_header = {"criterion", "pass", "seconds", "detail"};
  for (int id : ids) {
    const auto r = run_criterion(id);
    if (c.format == "text") out << format_result(r) << "\n" << std::flush;
    if (!r.pass) failed += (failed.empty() ? "" : ",") + std::to_string(id);
    e.results.push_back({{"criterion", id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds},
                         {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
    e.csv_rows.push_back({std::to_string(id), r.pass ? "true" : "false", g17(r.seconds), "\"" + r.detail + "\""});
  }
  if (!failed.empty()) err << "verify: failing criteria " << failed << "\n";
  return failed.empty() ? 0 : 1;
}

int cmd_weil(const JobConfig& c, Emit& e) {
  e.csv_header = {"place", "re", "im"};
  auto add = [&](const std::string& place, cplx g) {
    e.results.push_back({{"place", place}, {"gamma", cj(g)}});
    e.csv_rows.push_back({place, g17(g.real()), g17(g.imag())});
  };
  cplx product;
  if (!c.field.empty()) {
    if (!c.global.empty()) throw ConfigError("weil-index: give either --global or --field");
    product = local_job(c).weil();
    add(c.field == "qp" || c.field == "qpn" ? std::to_string(c.p) : "inf", product);
  } else {
    if (c.global.empty()) throw ConfigError("weil-index: give --global or --field");
    const GlobalSpec spec = global_spec(c);
    add("inf", weil_index_real(spec.f_inf));
    for (const auto& pl : factorize(spec).places) {
      auto it = spec.finite.find(pl.p);
      add(pl.name(), weil_index_padic(it != spec.finite.end() ? it->second : PAdicSDC::standard(pl.p)));
    }
    product = weil_index_global(spec);
  }
  e.extra["product"] = cj(product);
  e.csv_rows.push_back({"product", g17(product.real()), g17(product.imag())});
  return 0;
}

}  // namespace

json JobConfig::to_json() const {
  return json{{"command", command}, {"format", format},   {"output", output},         {"field", field},
              {"p", p},             {"a", a},             {"b", b},                   {"n", n},
              {"odd", odd},         {"with_oracle", with_oracle}, {"global", global}, {"a_inf", a_inf},
              {"b_inf", b_inf},     {"places", places},   {"chi", chi},               {"s", s},
              {"grid", grid},       {"re0", re0},         {"re1", re1},               {"imin", imin},
              {"imax", imax},       {"step", step},       {"accept_rel", accept_rel}, {"suite", suite}};
}

JobConfig JobConfig::from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  JobConfig c;
  const json known = c.to_json();
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.contains(it.key())) throw ConfigError("unknown config field: " + it.key());
  try {
    json merged = known;
    merged.update(j);
    merged.at("command").get_to(c.command);
    merged.at("format").get_to(c.format);
    merged.at("output").get_to(c.output);
    merged.at("field").get_to(c.field);
    merged.at("p").get_to(c.p);
    merged.at("a").get_to(c.a);
    merged.at("b").get_to(c.b);
    merged.at("n").get_to(c.n);
    merged.at("odd").get_to(c.odd);
    merged.at("with_oracle").get_to(c.with_oracle);
    merged.at("global").get_to(c.global);
    merged.at("a_inf").get_to(c.a_inf);
    merged.at("b_inf").get_to(c.b_inf);
    merged.at("places").get_to(c.places);
    merged.at("chi").get_to(c.chi);
    merged.at("s").get_to(c.s);
    merged.at("grid").get_to(c.grid);
    merged.at("re0").get_to(c.re0);
    merged.at("re1").get_to(c.re1);
    merged.at("imin").get_to(c.imin);
    merged.at("imax").get_to(c.imax);
    merged.at("step").get_to(c.step);
    merged.at("accept_rel").get_to(c.accept_rel);
    merged.at("suite").get_to(c.suite);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("config: ") + ex.what());
  }
  return c;
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  JobConfig c = cfg;
  try {
    if (c.format.empty()) c.format = c.command == "zeros" ? "csv" : c.command == "verify" ? "text" : "json";
    const bool text_ok = c.command == "verify" && c.format == "text";
    if (c.format != "json" && c.format != "csv" && !text_ok) throw ConfigError("--format must be json or csv");
    if (!(c.step > 0) || !(c.accept_rel > 0)) throw ConfigError("tolerances must be positive");
    Emit e;
    int status;
    if (c.command == "local") status = cmd_local(c, e);
    else if (c.command == "global") status = cmd_global(c, e);
    else if (c.command == "zeros") status = cmd_zeros(c, e, err);
    else if (c.command == "verify") status = cmd_verify(c, e, out, err);
    else if (c.command == "weil-index") status = cmd_weil(c, e);
    else throw ConfigError("unknown command: " + c.command);
    if (c.format != "text") write(c, e, out);
    return status;
  } catch (const ConfigError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const DegenerateError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "numeric failure: " << ex.what() << "\n";
    return 1;
  }
}

int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta integrals of second degree characters"};
  app.require_subcommand(0, 1);
  JobConfig c;
  std::string config_path;
  app.add_option("--config", config_path, "JSON job config (replaces the subcommand)");

  auto io = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or csv (verify also text)");
    sub->add_option("--output,-o", c.output, "output path (default stdout)");
  };
  auto local_opts = [&](CLI::App* sub) {
    sub->add_option("--field", c.field, "real, hermitian, square, rn, qp, qpn");
    sub->add_option("--p", c.p, "prime for qp and qpn");
    sub->add_option("--a", c.a, "a (real, complex re,im or p-adic rational)");
    sub->add_option("--b", c.b, "b (real, complex re,im or p-adic rational)");
    sub->add_option("--n", c.n, "character exponent over C, dimension for rn");
    sub->add_flag("--odd", c.odd, "sign character over R");
  };
  auto global_opts = [&](CLI::App* sub) {
    sub->add_option("--global", c.global, "reference or custom");
    sub->add_option("--a-inf", c.a_inf, "a at infinity");
    sub->add_option("--b-inf", c.b_inf, "b at infinity");
    sub->add_option("--place", c.places, "p:a:b for a finite place");
  };
  auto chi_opt = [&](CLI::App* sub) { sub->add_option("--chi", c.chi, "p:e:t character component"); };
  auto pts = [&](CLI::App* sub) {
    sub->add_option("--s", c.s, "evaluation point re or re,im");
    sub->add_option("--grid", c.grid, "re0,re1,nre,im0,im1,nim");
  };

  auto* local = app.add_subcommand("local", "evaluate a local zeta integral");
  local_opts(local);
  chi_opt(local);
  pts(local);
  local->add_flag("--with-oracle", c.with_oracle, "also evaluate the brute-force oracle");
  io(local);

  auto* global = app.add_subcommand("global", "evaluate Xi_f and its factorization");
  global_opts(global);
  chi_opt(global);
  pts(global);
  io(global);

  auto* zeros = app.add_subcommand("zeros", "locate and certify zeros");
  global_opts(zeros);
  local_opts(zeros);
  chi_opt(zeros);
  zeros->add_option("--re0", c.re0, "left edge of the global box");
  zeros->add_option("--re1", c.re1, "right edge of the global box");
  zeros->add_option("--imin", c.imin, "lower height");
  zeros->add_option("--imax", c.imax, "upper height");
  zeros->add_option("--step", c.step, "line scan step");
  zeros->add_option("--accept-rel", c.accept_rel, "relative |f| acceptance for line minima");
  io(zeros);

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--suite", c.suite, "all or a comma list of criteria");
  io(verify);

  auto* weil = app.add_subcommand("weil-index", "Weil index per place and the product");
  global_opts(weil);
  local_opts(weil);
  chi_opt(weil);
  io(weil);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (!config_path.empty()) {
    if (!app.get_subcommands().empty()) {
      err << "error: --config replaces the subcommand\n";
      return 2;
    }
    std::ifstream f(config_path);
    if (!f) {
      err << "error: cannot read " << config_path << "\n";
      return 2;
    }
    try {
      c = JobConfig::from_json(json::parse(f));
    } catch (const std::exception& ex) {
      err << "error: " << ex.what() << "\n";
      return 2;
    }
    return run(c, out, err);
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.command == "global" && c.global.empty()) c.global = "reference";
  return run(c, out, err);
}

}  // namespace mw::cli
