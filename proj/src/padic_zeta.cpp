#include "mellin/padic_zeta.hpp"

#include <cmath>
#include <sstream>

namespace mw {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int neg_val(const PAdicRational& x) { return x.is_zero() ? 0 : std::max(0, -x.valuation()); }

bool is_one(cplx z) { return std::abs(z - 1.0) < 1e-9; }
bool is_zero(cplx z) { return std::abs(z) < 1e-11; }

// Laurent variable Z = twist q^{-s}
cplx zvar(const LocalFactor& F, cplx s) { return F.twist * std::exp(-s * std::log(double(F.p))); }

// Mellin of the theta profile times (1 - q^{s-n}); pole at Z = 1 kept explicit
cplx theta_part(const LocalFactor& F, cplx Z, bool euler_inverse) {
  const double q = F.p;
  const int n = F.dim, m = F.prof.k, d = F.prof.delta;
  const double qn = std::pow(q, -n);
  cplx w = qn / Z;  // q^{s-n}
  cplx head = (1.0 - w) * std::pow(Z, m);
  cplx tail = F.prof.gamma * std::pow(q, n * d / 2.0) * std::pow(w, m + d);
  if (m == 0 && d == 0) tail -= 1.0 - w;
  if (euler_inverse) return head + (1.0 - Z) * tail;
  if (std::abs(1.0 - Z) < 1e-13) throw PoleError("local factor: pole at q^{-s} = 1");
  return head / (1.0 - Z) + tail;
}

}  // namespace

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::RationalInQs: return "RationalInQs";
    case FactorKind::TwoTermExp: return "TwoTermExp";
    case FactorKind::Qp2Special: return "Qp2Special";
    case FactorKind::VectorTheta: return "VectorTheta";
    case FactorKind::Vanishes: return "Vanishes";
    case FactorKind::ArchClosed: return "ArchClosed";
  }
  return "?";
}

cplx ExpPoly::operator()(cplx X) const {
  cplx r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * X + *it;
  return r;
}

cplx LocalFactor::eval(cplx s) const {
  if (kind == FactorKind::Vanishes) return 0.0;
  if (kind == FactorKind::ArchClosed) throw DomainError("LocalFactor: archimedean factors evaluate in arch-zeta");
  cplx Z = zvar(*this, s);
  cplx scale = std::pow(Z, scale_exp);
  if (ramified) {
    const double q = p;
    const int k = prof.k, d = prof.delta;
    cplx D = omega * prof.C * std::pow(q, -k - d / 2.0);
    return scale * (prof.C * std::pow(Z, k) + D * std::pow(Z, -(k + d)));
  }
  if (kind == FactorKind::RationalInQs && dim == 1) {
    if (std::abs(1.0 - Z) < 1e-13) throw PoleError("local factor: pole at q^{-s} = 1");
    return scale / (1.0 - Z);
  }
  cplx t = theta_part(*this, Z, false);
  if (dim == 1) t /= 1.0 - 1.0 / p;
  return scale * t;
}

cplx LocalFactor::times_euler_inverse(cplx s) const {
  if (kind == FactorKind::Vanishes) return 0.0;
  if (ramified) return eval(s);
  cplx Z = zvar(*this, s);
  cplx scale = std::pow(Z, scale_exp);
  if (kind == FactorKind::RationalInQs && dim == 1) return scale;
  cplx t = theta_part(*this, Z, true);
  if (dim == 1) t /= 1.0 - 1.0 / p;
  return scale * t;
}

ExpPoly LocalFactor::x_polynomial() const {
  ExpPoly P;
  P.q = p;
  P.center = dim / 2.0;
  if (kind == FactorKind::Vanishes) return P;
  if (ramified) {
    const int N = 2 * prof.k + prof.delta;
    if (N == 0) return P;
    P.coeffs.assign(N + 1, 0.0);
    P.coeffs[0] = 1.0;
    P.coeffs[N] = omega;
    return P;
  }
  const int N = 2 * prof.k + prof.delta;
  if (N == 0) return P;
  const double Q = std::pow(double(p), dim / 2.0);
  P.coeffs.assign(N + 1, 0.0);
  P.coeffs[0] += 1.0;
  P.coeffs[1] += -1.0 / Q;
  P.coeffs[N - 1] += -prof.gamma / Q;
  P.coeffs[N] += prof.gamma;
  return P;
}

std::string LocalFactor::describe() const {
  std::ostringstream os;
  os << kind_name(kind) << " p=" << p;
  if (dim != 1) os << " n=" << dim;
  os << " k=" << prof.k << " delta=" << prof.delta;
  if (ramified)
    os << " cond=" << conductor << " C=" << prof.C << " omega=" << omega;
  else
    os << " gamma=" << prof.gamma;
  if (scale_exp) os << " scale=" << p << "^(" << -scale_exp << "s)";
  return os.str();
}

ThetaProfile theta_profile(const PAdicSDC& f, int* scale_exp) {
  if (f.a.is_zero()) throw DegenerateError("theta_profile: a = 0");
  const int p = f.p;
  const int va = f.a.valuation();
  const int e = -floor_div(va, 2);
  const PAdicSDC g = f.rescaled(e);
  ThetaProfile prof;
  prof.q = p;
  prof.delta = g.a.valuation();
  const int bound = neg_val(g.a) + neg_val(g.b) + 2;
  int k = -1;
  for (int j = 0; j <= bound; ++j)
    if (is_one(theta_integral(g, PAdicRational::ppow(p, j)))) {
      k = j;
      break;
    }
  if (k < 0) throw ConvergenceError("theta_profile: no level with f(p^k x) = 1 on Z_p");
  prof.k = k;
  for (int j = -k - prof.delta + 1; j < k; ++j)
    if (!is_zero(theta_integral(g, PAdicRational::ppow(p, j))))
      throw DomainError("theta_profile: profile is not of two-piece form");
  const int j0 = -k - prof.delta;
  cplx th = theta_integral(g, PAdicRational::ppow(p, j0));
  prof.gamma = th / std::pow(double(p), j0 + prof.delta / 2.0);
  if (std::abs(std::abs(prof.gamma) - 1.0) > 1e-10)
    throw DomainError("theta_profile: reflected piece has the wrong modulus");
  if (scale_exp) *scale_exp = e;
  return prof;
}

LocalFactor local_factor_unramified(const PAdicSDC& f) {
  LocalFactor F;
  F.p = f.p;
  F.prof = theta_profile(f, &F.scale_exp);
  if (F.prof.k == 0 && F.prof.delta == 0)
    F.kind = FactorKind::RationalInQs;
  else if (f.p == 2 && f.a == PAdicRational::from_int(2, 1) && f.b.is_zero())
    F.kind = FactorKind::Qp2Special;
  else
    F.kind = FactorKind::TwoTermExp;
  return F;
}

cplx qp2_special(cplx s) {
  cplx t = std::pow(2.0, -s);
  if (std::abs(1.0 - t) < 1e-13) throw PoleError("qp2_special: pole at 2^{-s} = 1");
  cplx g = expipi(0.25);
  return (2.0 * t * (1.0 - 0.5 / t) + g * (1.0 / t) * (1.0 - t)) / (1.0 - t);
}

cplx rho0_gauss_sum(const DirichletCharData& chi) {
  if (!chi.ramified()) throw DomainError("rho0_gauss_sum: character is unramified");
  const long long M = ipow(chi.p, chi.conductor_level);
  cplx sum = 0.0;
  for (long long e = 1; e < M; ++e) {
    if (e % chi.p == 0) continue;
    sum += chi(e) * std::polar(1.0, 2.0 * kPi * double(e) / double(M));
  }
  return sum / std::sqrt(double(M));
}

LocalFactor local_factor_ramified(const PAdicSDC& f, const DirichletCharData& chi) {
  if (f.p == 2) throw DomainError("local_factor_ramified: p = 2 is not supported");
  if (!chi.ramified()) throw DomainError("local_factor_ramified: character is unramified");
  if (chi.p != f.p) throw DomainError("local_factor_ramified: prime mismatch");
  if (f.a.is_zero()) throw DegenerateError("local_factor_ramified: a = 0");
  const int p = f.p, n = chi.conductor_level;
  const int va = f.a.valuation();
  const int d = ((va + n) % 2 + 2) % 2;
  const int e = (-n + d - va) / 2;
  const PAdicSDC g = f.rescaled(e);
  LocalFactor F;
  F.p = p;
  F.ramified = true;
  F.conductor = n;
  F.scale_exp = e;
  F.kind = FactorKind::TwoTermExp;
  F.prof.delta = d;
  const int J = n + neg_val(g.b) + 2;
  std::vector<std::pair<int, cplx>> support;
  for (int j = -J; j <= J; ++j) {
    cplx v = unit_average(g, PAdicRational::ppow(p, j), chi);
    if (!is_zero(v)) support.emplace_back(j, v);
  }
  if (support.empty()) {
    F.kind = FactorKind::Vanishes;
    F.prof.vanishes = true;
    F.omega = 0.0;
    F.prof.C = 0.0;
    return F;
  }
  if (support.size() == 1) {
    if (support[0].first != 0 || d != 0)
      throw DomainError("local_factor_ramified: unexpected one-point support");
    F.prof.k = 0;
    F.prof.C = support[0].second;
    F.omega = 0.0;
    return F;
  }
  if (support.size() != 2) throw DomainError("local_factor_ramified: support has more than two points");
  const int k = support[1].first;
  if (k < 0 || support[0].first != -k - d)
    throw DomainError("local_factor_ramified: support is not reflection-symmetric");
  F.prof.k = k;
  F.prof.C = support[1].second;
  F.omega = support[0].second * std::pow(double(p), k + d / 2.0) / F.prof.C;
  if (std::abs(std::abs(F.omega) - 1.0) > 1e-10)
    throw DomainError("local_factor_ramified: |omega| != 1");
  return F;
}

cplx weil_index_padic(const PAdicSDC& f) { return theta_profile(f).gamma; }

LocalFactor padic_vector_factor(const std::vector<PAdicSDC>& fs) {
  if (fs.empty()) throw DomainError("padic_vector_factor: empty list");
  const int p = fs[0].p;
  for (const auto& f : fs) {
    if (f.a.is_zero()) throw DegenerateError("padic_vector_factor: a = 0");
    if (f.p != p) throw DomainError("padic_vector_factor: primes differ");
    if (f.a.valuation() != fs[0].a.valuation()) throw DomainError("padic_vector_factor: moduli differ");
  }
  LocalFactor F;
  F.kind = FactorKind::VectorTheta;
  F.p = p;
  F.dim = int(fs.size());
  F.prof.gamma = 1.0;
  F.prof.k = 0;
  for (const auto& f : fs) {
    int e = 0;
    ThetaProfile t = theta_profile(f, &e);
    F.scale_exp = e;
    F.prof.delta = t.delta;
    F.prof.k = std::max(F.prof.k, t.k);
    F.prof.gamma *= t.gamma;
  }
  return F;
}

cplx padic_rho(int p, const UnitChar& chi, cplx s) {
  const double q = p;
  if (!chi || !chi->ramified()) {
    cplx t = std::pow(q, -s);
    if (std::abs(1.0 - t) < 1e-13) throw PoleError("padic_rho: pole");
    return (1.0 - std::pow(q, s - 1.0)) / (1.0 - t);
  }
  return std::pow(q, double(chi->conductor_level) * (s - 0.5)) * rho0_gauss_sum(*chi);
}

LocalFactor padic_local_factor(const PAdicSDC& f, const UnitChar& chi) {
  if (chi && chi->ramified()) return local_factor_ramified(f, *chi);
  return local_factor_unramified(f);
}

}  // namespace mw
