#include "mellin/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mw {

namespace {

// Lanczos-type rational approximation, g = 671/128
const double kLanczos[14] = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

cplx lgamma_right(cplx z) {
  cplx y = z;
  cplx tmp = z + 5.24218750000000000;
  tmp = (z + 0.5) * std::log(tmp) - tmp;
  cplx ser = 0.999999999999997092;
  for (double c : kLanczos) {
    y += 1.0;
    ser += c / y;
  }
  return tmp + std::log(2.5066282746310005 * ser / z);
}

bool near_nonpositive_int(cplx z, double tol) {
  if (z.real() > tol) return false;
  double n = std::round(z.real());
  return std::abs(z - cplx(n, 0.0)) < tol;
}

// ---- double-double arithmetic for the 1F1 series ----

struct dd {
  double hi = 0, lo = 0;
};

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  double p = a.hi * b.hi;
  double e = std::fma(a.hi, b.hi, -p);
  e += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p, e);
}

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * dd{q1, 0};
  double q2 = r.hi / b.hi;
  r = r - b * dd{q2, 0};
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd{q3, 0};
}

struct cdd {
  dd re, im;
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator*(cdd a, cdd b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd scale_div(cdd a, dd d) { return {a.re / d, a.im / d}; }
inline double mag(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

// Bernoulli numbers B_{2k}, k = 1..12
const double kB2k[12] = {1.0 / 6,          -1.0 / 30,         1.0 / 42,
                         -1.0 / 30,        5.0 / 66,          -691.0 / 2730,
                         7.0 / 6,          -3617.0 / 510,     43867.0 / 798,
                         -174611.0 / 330,  854513.0 / 138,    -236364091.0 / 2730};

// (x^{1-s} - 1)/(s - 1), stable near s = 1
cplx pole_term_shifted(double x, cplx s) {
  cplx w = (1.0 - s) * std::log(x);
  cplx e;
  if (std::abs(w) < 1e-5) {
    e = w * (1.0 + w / 2.0 + w * w / 6.0);
  } else {
    e = std::exp(w) - 1.0;
  }
  if (std::abs(s - 1.0) < 1e-300) return -std::log(x);
  return e / (s - 1.0);
}

cplx hurwitz_core(cplx s, double a, bool drop_pole_constant) {
  const int N = 50;
  cplx sum = 0.0;
  for (int n = 0; n < N; ++n) sum += std::pow(n + a, -s);
  double x = N + a;
  cplx xs = std::pow(x, -s);
  if (drop_pole_constant) {
    sum += pole_term_shifted(x, s);
  } else {
    sum += x * xs / (s - 1.0);
  }
  sum += 0.5 * xs;
  // Euler-Maclaurin corrections
  cplx poch = s;                  // (s)_{2k-1}
  cplx xpow = xs / x;             // x^{-s-2k+1}
  double fact = 2.0;              // (2k)!
  for (int k = 1; k <= 12; ++k) {
    cplx term = kB2k[k - 1] / fact * poch * xpow;
    sum += term;
    if (k >= 8 && std::abs(term) < 1e-17 * std::abs(sum)) break;
    poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
    xpow /= x * x;
    fact *= double(2 * k + 1) * double(2 * k + 2);
  }
  return sum;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (near_nonpositive_int(z, 1e-9)) throw PoleError("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return lgamma_right(z);
  // reflection
  return std::log(kPi) - std::log(std::sin(kPi * z)) - lgamma_right(1.0 - z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

namespace {
cplx rgamma(cplx b) {
  if (b.real() >= 0.5) return std::exp(-lgamma_right(b));
  return std::sin(kPi * b) / kPi * std::exp(lgamma_right(1.0 - b));
}
}  // namespace

cplx gamma_ratio(cplx a, cplx b) {
  if (near_nonpositive_int(b, 1e-12) && !near_nonpositive_int(a, 1e-12)) return 0.0;
  if (a.real() >= 0.5 && b.real() >= 0.5) return std::exp(lgamma_right(a) - lgamma_right(b));
  return gamma_fn(a) * rgamma(b);
}

EvalQuality hyp1f1(cplx u, double v, cplx z) {
  if (!(v > 0)) throw DomainError("hyp1f1: v must be positive");
  if (std::abs(z) > 40.0) throw DomainError("hyp1f1: |z| > 40");
  cdd term{{1.0, 0}, {0, 0}};
  cdd sum = term;
  cdd zz{{z.real(), 0}, {z.imag(), 0}};
  double max_partial = 1.0;
  int k = 0;
  const int kmax = 4000;
  for (; k < kmax; ++k) {
    cdd uk{two_sum(u.real(), double(k)), {u.imag(), 0}};
    dd den = two_sum(v, double(k)) * dd{double(k + 1), 0};
    term = scale_div(term * uk * zz, den);
    sum = sum + term;
    double ms = mag(sum);
    max_partial = std::max(max_partial, ms);
    double t = mag(term);
    if (t == 0.0) {
      ++k;
      break;
    }
    double ratio = std::abs(u + double(k + 1)) * std::abs(z) / ((v + k + 1) * (k + 2));
    if (ratio < 0.5 && 2.0 * t * ratio < 1e-17 * ms) {
      ++k;
      break;
    }
  }
  EvalQuality q;
  q.value = cplx(sum.re.hi + sum.re.lo, sum.im.hi + sum.im.lo);
  double m = std::abs(q.value);
  q.cancellation_ratio = m > 0 ? std::max(1.0, max_partial / m) : 1e300;
  q.terms_used = std::max(1, k + 1);
  q.precision_warning = q.cancellation_ratio > 1e12;
  return q;
}

cplx hurwitz_zeta(cplx s, double a) {
  if (std::abs(s - 1.0) < 1e-6) throw PoleError("hurwitz_zeta: pole at s = 1");
  return hurwitz_core(s, a, false);
}

cplx riemann_zeta(cplx s) {
  if (std::abs(s - 1.0) < 1e-6) throw PoleError("riemann_zeta: pole at s = 1");
  if (std::abs(s.imag()) > 60.0) throw DomainError("riemann_zeta: |Im s| > 60");
  if (s.real() < 0.0) {
    cplx t = 1.0 - s;
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) *
           gamma_fn(t) * hurwitz_core(t, 1.0, false);
  }
  return hurwitz_core(s, 1.0, false);
}

cplx DirichletCharacter::operator()(long long n) const {
  long long r = n % modulus;
  if (r < 0) r += modulus;
  return values[r];
}

bool DirichletCharacter::is_trivial() const {
  for (int n = 0; n < modulus; ++n)
    if (std::gcd(n, modulus) == 1 && std::abs(values[n] - 1.0) > 1e-12) return false;
  return true;
}

bool DirichletCharacter::is_primitive() const {
  if (modulus == 1) return true;
  for (int d = 1; d < modulus; ++d) {
    if (modulus % d) continue;
    bool induced = true;
    for (int n = 1; n < modulus && induced; ++n) {
      if (std::gcd(n, modulus) != 1 || (n - 1) % d != 0) continue;
      if (std::abs(values[n] - 1.0) > 1e-9) induced = false;
    }
    if (induced) return false;
  }
  return true;
}

int DirichletCharacter::parity() const {
  if (modulus <= 2) return 0;
  return std::abs((*this)(-1) - 1.0) < 1e-9 ? 0 : 1;
}

std::string DirichletCharacter::describe() const {
  std::ostringstream os;
  os << "mod " << modulus << (parity() ? " odd" : " even");
  return os.str();
}

cplx dirichlet_l(cplx s, const DirichletCharacter& chi) {
  if (chi.modulus > 1000) throw DomainError("dirichlet_l: modulus above 1000");
  if (!chi.is_primitive()) throw DomainError("dirichlet_l: character is not primitive");
  if (chi.modulus == 1) return riemann_zeta(s);
  if (std::abs(s.imag()) > 60.0) throw DomainError("dirichlet_l: |Im s| > 60");
  const int q = chi.modulus;
  cplx sum = 0.0;
  for (int a = 1; a <= q; ++a) {
    cplx c = chi(a);
    if (c == 0.0) continue;
    sum += c * hurwitz_core(s, double(a) / q, true);
  }
  return std::pow(double(q), -s) * sum;
}

std::vector<long long> primes_upto(long long n) {
  std::vector<char> comp(n + 1, 0);
  std::vector<long long> out;
  for (long long i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long long j = i * i; j <= n; j += i) comp[j] = 1;
  }
  return out;
}

cplx dirichlet_l_euler(cplx s, const DirichletCharacter& chi, long long pmax) {
  cplx prod = 1.0;
  for (long long p : primes_upto(pmax)) prod *= 1.0 - chi(p) * std::pow(double(p), -s);
  return 1.0 / prod;
}

cplx completed_xi(cplx s) {
  if (std::abs(s) < 1e-6 || std::abs(s - 1.0) < 1e-6) throw PoleError("completed_xi: pole");
  return std::exp(log_gamma(s / 2.0) - s / 2.0 * std::log(kPi)) * riemann_zeta(s);
}

}  // namespace mw
