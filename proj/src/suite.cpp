#include "mellin/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "mellin/arch_zeta.hpp"
#include "mellin/global_zeta.hpp"
#include "mellin/oracle.hpp"
#include "mellin/quad.hpp"
#include "mellin/specfun.hpp"

namespace mw {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream msg;
  std::string failures;

  void fail(const std::string& why) {
    ok = false;
    if (failures.find(why) == std::string::npos) failures += why + "; ";
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void note(const std::string& key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.2e ", key.c_str(), v);
    msg << buf;
  }
};

std::vector<cplx> grid9() {
  std::vector<cplx> g;
  for (double re : {0.3, 0.7, 1.5})
    for (double im : {0.0, 1.0, 5.0}) g.emplace_back(re, im);
  return g;
}

std::vector<cplx> strip_grid() {
  std::vector<cplx> g;
  for (double re : {0.1, 0.3, 0.5, 0.7, 0.9})
    for (double im : {-5.0, -2.5, 0.0, 2.5, 5.0}) g.emplace_back(re, im);
  return g;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

PAdicSDC sdc(int p, const std::string& a, const std::string& b) {
  return PAdicSDC::make(p, PAdicRational::parse(p, a), PAdicRational::parse(p, b));
}

// ---- 1
void c1(Outcome& o) {
  double worst = 0;
  for (int p : {3, 5, 7, 11}) {
    const PAdicSDC f = PAdicSDC::standard(p);
    const LocalFactor F = local_factor_unramified(f);
    const PadicMellinOracle O(f, std::nullopt);
    for (cplx s : grid9()) {
      const cplx closed = 1.0 / (1.0 - std::pow(double(p), -s));
      const cplx v = O(s);
      worst = std::max({worst, std::abs(v - closed), std::abs(F.eval(s) - v)});
    }
  }
  o.note("max_abs_err", worst);
  o.require(worst <= 1e-12, "closed form vs oracle above 1e-12");
}

// ---- 2
void c2(Outcome& o) {
  const PAdicSDC f = PAdicSDC::standard(2);
  const LocalFactor F = local_factor_unramified(f);
  const PadicMellinOracle O(f, std::nullopt);
  double worst = 0;
  for (cplx s : grid9()) worst = std::max({worst, std::abs(O(s) - qp2_special(s)), std::abs(F.eval(s) - qp2_special(s))});
  const double at1 = std::max(std::abs(qp2_special(1.0) - 2.0 * expipi(0.25)), std::abs(O(1.0) - 2.0 * expipi(0.25)));
  o.note("max_abs_err", worst);
  o.note("zeta(1)_err", at1);
  o.require(worst <= 1e-12, "qp2_special vs oracle above 1e-12");
  o.require(at1 <= 1e-12, "zeta_f(1) != 2 e^{i pi/4}");
}

// ---- 3
void c3(Outcome& o) {
  double worst = 0;
  for (auto [p, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}}) {
    const PAdicSDC f = PAdicSDC::make(p, PAdicRational::from_int(p, 1), PAdicRational::ppow(p, -k));
    const LocalFactor F = local_factor_unramified(f);
    const ExpPoly P = F.x_polynomial();
    const auto roots = poly_roots(P.coeffs);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(k) + ")";
    o.require(P.degree() == 2 * k && int(roots.size()) == 2 * k, tag + " root count != 2k");
    for (cplx X : roots) worst = std::max(worst, std::abs(std::abs(X) - 1.0));
    o.require(sign_change_scan(P).count == 2 * k, tag + " sign-change count != 2k");
  }
  o.note("max_||X|-1|", worst);
  o.require(worst <= 1e-10, "root off the unit circle");
}

// ---- 4
void c4(Outcome& o) {
  double worst = 0, worst_re = 0, worst_rho = 0;
  int vanishing = 0, closed = 0;
  const auto grid = grid9();
  for (int p : {3, 5}) {
    for (const auto& chi : characters_mod(p, 1)) {
      if (!chi.ramified()) continue;
      worst_rho = std::max(worst_rho, std::abs(std::abs(rho0_gauss_sum(chi)) - 1.0));
      const std::string pp = std::to_string(p);
      for (const std::string& b : {std::string("0"), "1/" + pp, "1/" + std::to_string(p * p)}) {
        const PAdicSDC f = sdc(p, "1", b);
        const LocalFactor F = local_factor_ramified(f, chi);
        const PadicMellinOracle O(f, chi);
        if (F.kind == FactorKind::Vanishes) {
          ++vanishing;
          for (int i = 0; i < 5; ++i) o.require(std::abs(O(grid[i])) <= 1e-12, "vanishing factor has nonzero oracle");
          continue;
        }
        ++closed;
        for (cplx s : grid) worst = std::max(worst, std::abs(F.eval(s) - O(s)) / std::max(1.0, std::abs(O(s))));
        for (const auto& z : exp_poly_roots(F)) {
          o.require(z.certified, "uncertified ramified zero");
          worst_re = std::max(worst_re, std::abs(z.location.real() - 0.5));
        }
      }
    }
  }
  o.note("max_err", worst);
  o.note("max_|Re-1/2|", worst_re);
  o.note("max_||rho0|-1|", worst_rho);
  o.msg << "vanishing=" << vanishing << " closed=" << closed << " ";
  o.require(worst <= 1e-10, "ramified closed form vs oracle above 1e-10");
  o.require(worst_re <= 1e-10, "ramified zero off Re s = 1/2");
  o.require(worst_rho <= 1e-12, "|rho0| != 1");
  o.require(closed > 0, "no non-vanishing ramified factor exercised");
}

// ---- 5
void c5(Outcome& o) {
  std::mt19937_64 rng(20240517);
  std::uniform_real_distribution<double> ur(-2, 2), ui(-5, 5), rad(0, 10), ang(0, 2 * kPi);
  const double vs[4] = {0.5, 1, 1.5, 2.5};
  double kummer = 0;
  for (int i = 0; i < 200; ++i) {
    const double v = vs[i % 4];
    const cplx u(ur(rng), ui(rng));
    const cplx z = std::polar(rad(rng), ang(rng));
    const cplx lhs = std::exp(z) * hyp1f1_value(u, v, -z);
    const cplx rhs = hyp1f1_value(v - u, v, z);
    kummer = std::max(kummer, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
  }
  o.note("kummer", kummer);
  o.require(kummer <= 1e-10, "Kummer residual above 1e-10");

  double fe = 0;
  const std::vector<RealSDC> cases{{1, 0}, {1, 1}, {2, 0.5}, {0.5, 1.5}};
  for (const auto& f : cases)
    for (bool odd : {false, true})
      for (cplx s : strip_grid()) fe = std::max(fe, real_fe_residual(f, s, odd));
  o.note("fe", fe);
  o.require(fe <= 1e-9, "local FE residual above 1e-9");

  double off = 0;
  int zeros = 0;
  for (const auto& f : cases) {
    if (f.b == 0) continue;
    for (bool odd : {false, true}) {
      CFun g = [f, odd](cplx s) { return zeta_real(f, s, odd); };
      const auto zs = line_zeros(g, 0.5, 0.0, 40.0, 0.05);
      int mult = 0;
      for (const auto& z : zs) {
        o.require(z.certified, "uncertified line zero");
        off = std::max(off, std::abs(z.location.real() - 0.5));
        mult += z.multiplicity;
      }
      zeros += mult;
      const int box = winding_count_tiled(g, 0.1, 0.9, 0.0, 40.0);
      o.require(box == mult, "box winding count != line count");
    }
  }
  o.note("max_|Re-1/2|", off);
  o.msg << "zeros=" << zeros << " ";
  o.require(off <= 1e-8, "zero off Re s = 1/2");
}

// ---- 6 and 9
struct ArchCase {
  std::string name;
  std::function<cplx()> closed;
  std::function<ArchOracleResult()> oracle;
};

std::vector<ArchCase> arch_cases() {
  std::vector<ArchCase> v;
  auto real = [&](double a, double b, cplx s, bool odd) {
    v.push_back({"real", [=] { return zeta_real({a, b}, s, odd); }, [=] { return oracle_real_mellin_full(a, b, s, odd); }});
  };
  real(1, 1, 0.7, false);
  real(1, 1, {0.3, 2}, true);
  real(2, 0.5, {1.5, -1}, false);
  real(0.5, 1.5, {0.5, 3}, true);
  auto herm = [&](double a, cplx b, cplx s, int n) {
    v.push_back({"hermitian", [=] { return zeta_complex_hermitian({a, b}, s, n); },
                 [=] { return oracle_complex_hermitian_full(a, b, s, n); }});
  };
  herm(1, 0.0, 1.0, 0);
  herm(1.3, {0.3, -0.4}, {0.6, 1.2}, 0);
  herm(1.3, {0.3, -0.4}, {0.4, -0.5}, 1);
  herm(0.8, {0.5, 0.2}, {0.7, 2}, 2);
  auto square = [&](cplx a, cplx b, cplx s, int n) {
    v.push_back({"square", [=] { return zeta_complex_square({a, b}, s, n); },
                 [=] { return oracle_complex_square_full(a, b, s, n); }});
  };
  square({0.8, 0.6}, 0.0, {0.6, 1}, 0);
  square({0.8, 0.6}, 0.0, {0.3, -1}, 2);
  square(1.0, 0.3, {0.6, 1}, 0);
  square({0.8, 0.6}, {0.2, -0.3}, {0.4, 2}, 0);
  auto radial = [&](int n, double a, double bn, cplx s) {
    v.push_back({"radial", [=] { return zeta_rn_radial({n, a, bn}, s); }, [=] { return oracle_rn_radial_full(n, a, bn, s); }});
  };
  radial(1, 1, 1, {1.2, 0.7});
  radial(2, 1, 1, {0.8, -1.5});
  radial(3, 1, 1, {1.2, 0.7});
  radial(4, 1.5, 0.6, {1.6, 2});
  return v;
}

void c6(Outcome& o) {
  double worst = 0;
  std::string worst_name;
  for (const auto& c : arch_cases()) {
    const double e = rel(c.oracle().value, c.closed());
    if (e > worst) {
      worst = e;
      worst_name = c.name;
    }
  }
  o.note("max_rel_err", worst);
  o.msg << "(" << worst_name << ") ";
  o.require(worst <= 1e-5, "closed form vs quadrature oracle above 1e-5");
}

// ---- 7
void c7(Outcome& o) {
  const GlobalSpec R = GlobalSpec::reference();
  double fe = 0;
  for (cplx s : strip_grid()) fe = std::max(fe, global_fe_residual(R, s));
  o.note("fe", fe);
  o.require(fe <= 1e-9, "global FE residual above 1e-9");

  const GlobalZeroScan scan = scan_global_zeros(R, -0.1, 1.1, 1.0, 30.0);
  const auto xi = line_zeros([](cplx s) { return riemann_zeta(s); }, 0.5, 1.0, 30.0, 0.05);
  const auto two = exp_poly_roots_in(local_factor_unramified(PAdicSDC::standard(2)), 1.0, 30.0);
  o.require(xi.size() == 3, "expected three zeta zeros below height 30");
  o.require(scan.complete, "winding count disagrees with the located zeros");
  auto near = [](const std::vector<ZeroReport>& set, cplx s) {
    for (const auto& z : set)
      if (std::abs(z.location - s) <= 1e-6) return true;
    return false;
  };
  int nglobal = 0, nlocal = 0;
  double off = 0;
  for (const auto& z : scan.zeros) {
    o.require(z.certified, "uncertified global-scan zero");
    off = std::max(off, std::abs(z.location.real() - 0.5));
    if (z.cls == "global") {
      ++nglobal;
      o.require(near(xi, z.location), "zero labelled global is not a zeta zero");
    } else if (z.cls == "local" && z.place == "2") {
      ++nlocal;
      o.require(near(two, z.location), "zero labelled local(2) is not a 2-adic root");
    } else {
      o.fail("unexpected label " + z.cls + " " + z.place);
    }
  }
  o.require(nglobal == int(xi.size()), "global zero count mismatch");
  o.require(nlocal == int(two.size()), "2-adic zero count mismatch");
  o.note("max_|Re-1/2|", off);
  o.msg << "global=" << nglobal << " local2=" << nlocal << " winding=" << scan.winding_total << " ";
  o.require(off <= 1e-6, "zero off Re s = 1/2");
}

// ---- 8
void c8(Outcome& o) {
  double worst = 0, off = 0;
  for (int p : {3, 5}) {
    const std::string pp = "1/" + std::to_string(p);
    for (const auto& fs : {std::vector<PAdicSDC>{sdc(p, "1", pp), sdc(p, "1", "0")},
                           std::vector<PAdicSDC>{sdc(p, "1", pp), sdc(p, "1", pp)}}) {
      const LocalFactor F = padic_vector_factor(fs);
      const PadicMellinOracle O(fs);
      for (cplx s : grid9()) worst = std::max(worst, std::abs(F.eval(s) - O(s)) / std::max(1.0, std::abs(O(s))));
      const auto zs = exp_poly_roots(F);
      o.require(!zs.empty(), "vector factor without zeros");
      for (const auto& z : zs) {
        o.require(z.certified, "uncertified vector zero");
        off = std::max(off, std::abs(z.location.real() - F.critical_re()));
      }
    }
  }
  o.note("vec_err", worst);
  o.note("vec_|Re-n/2|", off);
  o.require(worst <= 1e-10, "vector factor vs oracle above 1e-10");
  o.require(off <= 1e-10, "vector zero off Re s = n/2");
  double roff = 0;
  for (int n : {2, 3}) {
    CFun g = [n](cplx s) { return zeta_rn_radial({n, 1, 1}, s); };
    const double c = n / 2.0;
    const auto zs = line_zeros(g, c, 0.5, 30.0, 0.05);
    o.require(!zs.empty(), "radial factor without zeros");
    int mult = 0;
    for (const auto& z : zs) {
      o.require(z.certified, "uncertified radial zero");
      roff = std::max(roff, std::abs(z.location.real() - c));
      mult += z.multiplicity;
    }
    o.require(winding_count_tiled(g, c - 0.4, c + 0.4, 0.5, 30.0) == mult, "radial box count != line count");
  }
  o.note("radial_|Re-n/2|", roff);
  o.require(roff <= 1e-8, "radial zero off Re s = n/2");
}

// ---- 9
void c9(Outcome& o) {
  // exactness witnesses
  double wit = 0, raw = 0;
  struct PC {
    PAdicSDC f;
    UnitChar chi;
  };
  const std::vector<PC> pcs{{sdc(3, "1", "1/9"), std::nullopt},
                            {PAdicSDC::standard(2), std::nullopt},
                            {sdc(5, "1", "1/5"), DirichletCharData::make(5, 1, 1)},
                            {sdc(3, "1/3", "1/3"), DirichletCharData::make(3, 1, 1)}};
  for (const auto& c : pcs) {
    const PadicMellinOracle base(c.f, c.chi);
    PadicOracleParams lm;
    lm.level_margin = 2;
    PadicOracleParams wide;
    wide.j_min = base.j_min() - 2;
    wide.j_max = base.j_max() + 2;
    const PadicMellinOracle O1(c.f, c.chi, lm), O2(c.f, c.chi, wide);
    for (cplx s : {cplx(0.3, 0), cplx(0.7, 1), cplx(1.5, 5)}) {
      // roundoff scale: sum over the widened range of max(1, |c_j|) |Z|^j
      double scale = 0;
      const double Z = std::pow(double(c.f.p), -s.real());
      for (size_t i = 0; i < O2.terms().size(); ++i)
        scale += std::max(1.0, std::abs(O2.terms()[i])) * std::pow(Z, O2.j_min() + int(i));
      const cplx v = base(s);
      wit = std::max({wit, std::abs(O1(s) - v) / scale, std::abs(O2(s) - v) / scale});
      raw = std::max({raw, std::abs(O1(s) - v), std::abs(O2(s) - v)});
    }
  }
  o.note("witness_raw", raw);
  o.note("witness_scaled", wit);
  o.require(wit <= 1e-14, "oracle not invariant under level/range changes");

  // scaling covariance
  double sc = 0;
  for (RealSDC f : {RealSDC{1, 1}, RealSDC{2, 0.5}})
    for (double c : {1.7, -0.6})
      for (bool odd : {false, true})
        for (cplx s : {cplx(0.7, 0), cplx(0.3, 2)}) {
          const cplx lhs = zeta_real({c * c * f.a, c * f.b}, s, odd);
          const cplx rhs = std::exp(-s * std::log(std::abs(c))) * ((odd && c < 0) ? -1.0 : 1.0) * zeta_real(f, s, odd);
          sc = std::max(sc, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
  for (const auto& c : pcs)
    for (cplx s : {cplx(0.7, 1), cplx(1.5, 0)}) {
      const cplx lhs = padic_local_factor(c.f.rescaled(1), c.chi).eval(s);
      const cplx rhs = std::exp(s * std::log(double(c.f.p))) * padic_local_factor(c.f, c.chi).eval(s);
      sc = std::max(sc, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  GlobalSpec R4 = GlobalSpec::reference();
  R4.finite[2] = sdc(2, "4", "0");
  const double fe4 = global_fe_residual(R4, {0.3, 5});
  o.note("scaling", sc);
  o.note("rescaled_fe", fe4);
  o.require(sc <= 1e-12, "scaling covariance broken");
  o.require(fe4 <= 1e-9, "rescaled global FE residual above 1e-9");

  // Fourier duality in b
  double fd = 0;
  const double a = 3;
  for (cplx s : {cplx(0.7, 1), cplx(0.4, -2)}) {
    const cplx lhs = gk_adaptive([&](double b) { return zeta_real({a, b}, s) * std::exp(-kPi * b * b); }, -6, 6, 1e-12);
    RadialIntegral I;
    I.P = s;
    const cplx kappa = kPi * cplx(1, a);
    I.g = [=](double r) { return 2.0 * std::exp(-kappa * r * r); };
    I.delta = 0.25 / std::sqrt(std::abs(kappa));
    I.head = series_exp_quad(kappa, 64);
    for (auto& x : I.head) x *= 2.0;
    I.freq = [=](double r) { return 2 * kPi * a * r; };
    I.R = 8;
    I.abs_tol = 1e-13;
    fd = std::max(fd, rel(lhs, radial_integral(I)));
  }
  o.note("fourier", fd);
  o.require(fd <= 1e-6, "Fourier-dual check above 1e-6");

  // eps-consistency
  double worst_ratio = 1e300;
  int used = 0;
  for (const auto& c : arch_cases()) {
    const auto r = c.oracle();
    if (r.per_eps.size() < 3) continue;
    for (size_t i = 0; i + 2 < r.per_eps.size(); ++i) {
      const double d0 = std::abs(r.per_eps[i] - r.per_eps[i + 1]), d1 = std::abs(r.per_eps[i + 1] - r.per_eps[i + 2]);
      if (d0 == 0 && d1 == 0) continue;
      worst_ratio = std::min(worst_ratio, d0 / d1);
      ++used;
    }
  }
  o.note("min_eps_ratio", worst_ratio);
  o.require(used > 0 && worst_ratio >= 1.8, "epsilon-consistency ratio below 1.8");
}

struct Entry {
  const char* title;
  double limit;
  void (*fn)(Outcome&);
};

const Entry kEntries[9] = {
    {"odd-prime unramified factors vs exact oracle", 1, c1},
    {"Q_2 factor vs exact oracle", 1, c2},
    {"unramified k >= 1 X-polynomial roots", 5, c3},
    {"ramified factors and rho0", 10, c4},
    {"real factors: Kummer, local FE, zeros", 60, c5},
    {"archimedean closed forms vs quadrature", 120, c6},
    {"global reference: FE, zero scan, classification", 300, c7},
    {"vector factors on Q_p^n and R^n", 60, c8},
    {"property suites", 120, c9},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > 9) throw DomainError("run_criterion: id must be in 1..9");
  const Entry& e = kEntries[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = e.title;
  r.limit_seconds = e.limit;
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    e.fn(o);
  } catch (const std::exception& ex) {
    o.fail(std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.limit_seconds) o.fail("runtime over limit");
  r.pass = o.ok;
  r.detail = o.failures + o.msg.str();
  while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s criterion %d: %s (%.2fs / %.0fs)", r.pass ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.limit_seconds);
  return std::string(buf) + " " + r.detail;
}

}  // namespace mw
