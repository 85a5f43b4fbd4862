#include "mellin/global_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mw {

namespace {

std::vector<std::pair<int, int>> factor_int(int n) {
  std::vector<std::pair<int, int>> out;
  for (int d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// x = r1 mod m1, x = r2 mod m2 with gcd(m1, m2) = 1
long long crt(long long r1, long long m1, long long r2, long long m2) {
  r1 = ((r1 % m1) + m1) % m1;
  for (long long k = 0; k < m2; ++k) {
    long long x = r1 + m1 * k;
    if (((x - r2) % m2 + m2) % m2 == 0) return x;
  }
  throw DomainError("crt: moduli are not coprime");
}

// omega_p on units: the conjugate of the p-component of chi
DirichletCharData local_unit_char(const DirichletCharacter& chi, int p, int e) {
  const long long pe = ipow(p, e), rest = chi.modulus / pe;
  DirichletCharData base = DirichletCharData::make(p, e, 0);
  const long long phi = base.phi();
  const cplx vg = chi(crt(base.generator, pe, 1, rest));
  long long t = std::llround(std::arg(vg) / (2 * kPi) * double(phi));
  t = ((t % phi) + phi) % phi;
  DirichletCharData w = DirichletCharData::make(p, e, (phi - t) % phi);
  for (long long u = 1; u < pe; ++u) {
    if (u % p == 0) continue;
    if (std::abs(w(u) - std::conj(chi(crt(u, pe, 1, rest)))) > 1e-9)
      throw DomainError("local_unit_char: character does not factor through the generator");
  }
  return w;
}

}  // namespace

GlobalSpec GlobalSpec::reference() {
  GlobalSpec g;
  g.f_inf = {1, 0};
  g.finite[2] = PAdicSDC::standard(2);
  return g;
}

std::string GlobalSpec::str() const {
  std::ostringstream os;
  os << "inf:(a=" << f_inf.a << ",b=" << f_inf.b << ")";
  for (const auto& [p, f] : finite) os << " " << p << ":" << f.str();
  os << " chi " << chi.describe();
  return os.str();
}

GlobalFactorization factorize(const GlobalSpec& spec) {
  if (spec.f_inf.a == 0) throw DegenerateError("factorize: a_inf = 0");
  const DirichletCharacter& chi = spec.chi;
  if (!chi.is_primitive()) throw DomainError("factorize: chi must be primitive");
  const int N = chi.modulus;
  if (N > 1 && N % 2 == 0) throw DomainError("factorize: even conductor is not supported");
  GlobalFactorization G;
  G.f_inf = spec.f_inf;
  G.odd_inf = chi.parity() == 1;
  G.chi = chi;
  std::map<int, PAdicSDC> S = spec.finite;
  if (!S.count(2)) S[2] = PAdicSDC::standard(2);
  std::map<int, int> ram;
  for (auto [p, e] : factor_int(N)) {
    ram[p] = e;
    if (!S.count(p)) S[p] = PAdicSDC::standard(p);
  }
  for (const auto& [p, f] : S) {
    if (f.p != p) throw DomainError("factorize: place label and prime differ");
    if (f.a.is_zero()) throw DegenerateError("factorize: a_p = 0");
    PlaceFactor v;
    v.p = p;
    if (ram.count(p)) {
      const int e = ram[p];
      const long long pe = ipow(p, e);
      v.ramified = true;
      v.unit_char = local_unit_char(chi, p, e);
      v.twist = chi(crt(1, pe, p, N / pe));
      v.local = local_factor_ramified(f, *v.unit_char);
    } else {
      v.twist = chi(p);
      v.local = local_factor_unramified(f);
      G.correction_primes.push_back(p);
    }
    v.local.twist = v.twist;
    G.places.push_back(v);
  }
  return G;
}

DirichletCharacter character_product(const std::vector<DirichletCharData>& parts) {
  DirichletCharacter chi;
  long long N = 1;
  for (const auto& c : parts) {
    for (const auto& d : parts)
      if (&c != &d && c.p == d.p) throw DomainError("character_product: repeated prime");
    N *= c.modulus();
  }
  if (N > 100000) throw DomainError("character_product: modulus too large");
  chi.modulus = int(N);
  chi.values.assign(N, 1.0);
  for (long long n = 0; n < N; ++n)
    for (const auto& c : parts) chi.values[n] *= c(n % c.modulus());
  return chi;
}

cplx GlobalFactorization::arch_value(cplx s) const { return zeta_real(f_inf, s, odd_inf); }

cplx GlobalFactorization::place_value(const PlaceFactor& v, cplx s) const {
  if (v.p == 0) return arch_value(s);
  return v.local.eval(s);
}

cplx GlobalFactorization::eval(cplx s) const {
  cplx r = arch_value(s);
  for (const auto& v : places) r *= v.ramified ? v.local.eval(s) : v.local.times_euler_inverse(s);
  if (r == 0.0) return r;
  if (chi.modulus == 1) return r * riemann_zeta(s);
  return r * dirichlet_l(s, chi);
}

cplx GlobalFactorization::eval_direct(cplx s, long long P, double* tail_rel) const {
  const double sigma = s.real();
  if (!(sigma > 1)) throw DomainError("eval_direct: need Re s > 1");
  cplx r = arch_value(s);
  for (const auto& v : places) r *= v.local.eval(s);
  // log of the product, summed in ascending order
  cplx lg = 0.0;
  for (long long p : primes_upto(P)) {
    bool inS = false;
    for (const auto& v : places) inS |= v.p == p;
    if (inS) continue;
    cplx c = chi(p);
    if (c == 0.0) continue;
    lg -= std::log(1.0 - c * std::exp(-s * std::log(double(p))));
  }
  if (tail_rel) {
    // sum_{p > P} |log(1 - x)| <= 2 sum_{n > P} n^{-sigma} <= 2 P^{1-sigma} / (sigma - 1)
    *tail_rel = std::expm1(2 * std::pow(double(P), 1 - sigma) / (sigma - 1));
  }
  return r * std::exp(lg);
}

cplx xi_f_reference(cplx s) {
  const cplx t = std::exp(-s * std::log(2.0));
  const cplx bracket = 2.0 * t * (1.0 - 0.5 / t) + expipi(0.25) / t * (1.0 - t);
  return std::exp(-s * kPi * kI / 4.0) * bracket * completed_xi(s);
}

cplx assemble_xi_f(const GlobalSpec& spec, cplx s) { return factorize(spec).eval(s); }

cplx weil_index_global(const GlobalSpec& spec) {
  cplx g = weil_index_real(spec.f_inf);
  for (const auto& [p, f] : spec.finite) g *= weil_index_padic(f);
  if (!spec.finite.count(2)) g *= weil_index_padic(PAdicSDC::standard(2));
  return g;
}

double idele_modulus(const GlobalSpec& spec) {
  double m = std::abs(spec.f_inf.a);
  for (const auto& [p, f] : spec.finite) m *= f.a.abs();
  return m;
}

cplx omega_of_a(const GlobalSpec& spec) {
  const GlobalFactorization G = factorize(spec);
  cplx w = (G.odd_inf && spec.f_inf.a < 0) ? -1.0 : 1.0;
  for (const auto& v : G.places) {
    auto it = spec.finite.find(v.p);
    if (it == spec.finite.end()) continue;  // standard f, a_p = 1
    const PAdicRational& a = it->second.a;
    w *= std::pow(v.twist, a.valuation());
    if (v.ramified) w *= v.unit_char->on_unit(a.unit_part());
  }
  return w;
}

double global_fe_residual(const GlobalSpec& spec, cplx s) {
  const GlobalFactorization G = factorize(spec);
  const cplx lhs = G.eval(s);
  const cplx rhs = weil_index_global(spec) * std::exp((0.5 - s) * std::log(idele_modulus(spec))) *
                   std::conj(omega_of_a(spec)) * std::conj(G.eval(1.0 - std::conj(s)));
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

void classify_zero(ZeroReport& z, const GlobalSpec& spec) {
  if (!z.certified) throw UncertifiedError("classify_zero: zero is not certified");
  const GlobalFactorization G = factorize(spec);
  const cplx s = z.location;
  for (const auto& v : G.places) {
    if (v.ramified) continue;
    if (std::abs(1.0 - v.twist * std::exp(-s * std::log(double(v.p)))) < 1e-8) {
      z.cls = "rejected";
      z.place = v.name();
      return;
    }
  }
  auto small = [&](auto&& fn) {
    try {
      return std::abs(fn()) < 1e-8;
    } catch (const PoleError&) {
      return false;
    }
  };
  if (small([&] { return G.arch_value(s); })) {
    z.cls = "local";
    z.place = "inf";
    return;
  }
  for (const auto& v : G.places)
    if (small([&] { return v.local.eval(s); })) {
      z.cls = "local";
      z.place = v.name();
      return;
    }
  z.cls = "global";
  z.place.clear();
}

GlobalZeroScan scan_global_zeros(const GlobalSpec& spec, double re0, double re1, double t0, double t1,
                                 double step, const LineScanOptions& opt) {
  const GlobalFactorization G = factorize(spec);
  CFun f = [&G](cplx s) { return G.eval(s); };
  GlobalZeroScan out;
  out.zeros = line_zeros(f, 0.5, t0, t1, step, opt);
  for (auto& z : out.zeros)
    if (z.certified) classify_zero(z, spec);
  out.winding_total = winding_count_tiled(f, re0, re1, t0, t1);
  int found = 0;
  for (const auto& z : out.zeros) found += z.multiplicity;
  out.complete = found == out.winding_total;
  return out;
}

}  // namespace mw
