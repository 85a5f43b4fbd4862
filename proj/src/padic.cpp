#include "mellin/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mw {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

namespace {

bigint bpow(long long b, int e) {
  bigint r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bigint mod_floor(const bigint& a, const bigint& m) {
  bigint r = a % m;
  if (r < 0) r += m;
  return r;
}

bigint mod_inverse(const bigint& a, const bigint& m) {
  bigint old_r = mod_floor(a, m), cur_r = m, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    bigint q = old_r / cur_r;
    bigint t = old_r - q * cur_r;
    old_r = cur_r;
    cur_r = t;
    t = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = t;
  }
  if (old_r != 1) throw DomainError("mod_inverse: not invertible");
  return mod_floor(old_s, m);
}

// phase exp(2 pi i r / M) for 0 <= r < M
cplx unit_root(const bigint& r, const bigint& M) {
  // reduce to a double fraction in [-1/2, 1/2)
  bigint twice = 2 * r;
  bigint rr = r;
  if (twice >= M) rr -= M;
  double frac = rr.convert_to<double>() / M.convert_to<double>();
  return std::polar(1.0, 2.0 * kPi * frac);
}

cplx unit_root_ll(long long r, long long M) {
  if (2 * r >= M) r -= M;
  return std::polar(1.0, 2.0 * kPi * (double(r) / double(M)));
}

// class of x modulo Z_p as n / p^k with 0 <= n < p^k; x = num / (den) where den = unit * p^k
struct FracClass {
  bigint n = 0;
  int k = 0;
};

FracClass frac_class(int p, const bigint& num, const bigint& den) {
  bigint d = den;
  if (d < 0) return frac_class(p, -num, -d);
  int k = 0;
  while (d % p == 0) {
    d /= p;
    ++k;
  }
  bigint nn = num;
  // strip common p factors of numerator against p^k
  while (k > 0 && nn % p == 0 && nn != 0) {
    nn /= p;
    --k;
  }
  if (k == 0 || nn == 0) return {0, 0};
  bigint M = bpow(p, k);
  bigint r = mod_floor(nn * mod_inverse(d, M), M);
  return {r, k};
}

// value of a x^2/2 + b x's pieces for f(u y): A = a y^2 / 2, B = b y as classes mod Z_p
void quad_classes(const PAdicSDC& f, const PAdicRational& y, FracClass& A, FracClass& B) {
  const int p = f.p;
  PAdicRational ay2 = f.a * y * y;
  bigint numA = ay2.numerator(), denA = 2;
  if (ay2.pow() >= 0)
    denA *= bpow(p, ay2.pow());
  else
    numA *= bpow(p, -ay2.pow());
  A = frac_class(p, numA, denA);
  PAdicRational by = f.b * y;
  bigint numB = by.numerator(), denB = 1;
  if (by.pow() >= 0)
    denB = bpow(p, by.pow());
  else
    numB *= bpow(p, -by.pow());
  B = frac_class(p, numB, denB);
}

}  // namespace

PAdicRational::PAdicRational(int p, bigint numerator, int pow) : p_(p), num_(std::move(numerator)), pow_(pow) {
  normalize();
}

void PAdicRational::normalize() {
  if (num_ == 0) {
    pow_ = 0;
    return;
  }
  while (num_ % p_ == 0) {
    num_ /= p_;
    --pow_;
  }
}

PAdicRational PAdicRational::ppow(int p, int e) {
  if (e >= 0) return PAdicRational(p, bpow(p, e), 0);
  return PAdicRational(p, bigint(1), -e);
}

PAdicRational PAdicRational::parse(int p, const std::string& text) {
  auto caret = text.find('^');
  auto slash = text.find('/');
  if (caret != std::string::npos && slash == std::string::npos) {
    long long base = std::stoll(text.substr(0, caret));
    int e = std::stoi(text.substr(caret + 1));
    if (base != p) throw DomainError("parse: base of power must be p");
    return ppow(p, e);
  }
  if (slash == std::string::npos) return PAdicRational(p, bigint(text), 0);
  bigint num(text.substr(0, slash));
  bigint den(text.substr(slash + 1));
  int k = 0;
  while (den % p == 0) {
    den /= p;
    ++k;
  }
  if (den != 1) throw DomainError("parse: denominator must be a power of p");
  return PAdicRational(p, num, k);
}

double PAdicRational::abs() const {
  if (is_zero()) return 0.0;
  return std::pow(double(p_), double(pow_));
}

double PAdicRational::to_double() const {
  return num_.convert_to<double>() * std::pow(double(p_), -double(pow_));
}

std::string PAdicRational::str() const {
  std::ostringstream os;
  os << num_;
  if (pow_ > 0) os << "/" << p_ << "^" << pow_;
  if (pow_ < 0) os << "*" << p_ << "^" << -pow_;
  return os.str();
}

PAdicRational PAdicRational::operator+(const PAdicRational& o) const {
  if (o.p_ != p_) throw DomainError("PAdicRational: prime mismatch");
  int P = std::max(pow_, o.pow_);
  bigint n = num_ * bpow(p_, P - pow_) + o.num_ * bpow(p_, P - o.pow_);
  return PAdicRational(p_, n, P);
}

PAdicRational PAdicRational::operator-(const PAdicRational& o) const { return *this + (-o); }

PAdicRational PAdicRational::operator*(const PAdicRational& o) const {
  if (o.p_ != p_) throw DomainError("PAdicRational: prime mismatch");
  return PAdicRational(p_, num_ * o.num_, pow_ + o.pow_);
}

PAdicRational frac_lambda(const PAdicRational& x) {
  if (x.pow() <= 0 || x.is_zero()) return PAdicRational::zero(x.p());
  bigint M = bpow(x.p(), x.pow());
  return PAdicRational(x.p(), mod_floor(x.numerator(), M), x.pow());
}

cplx psi_p(const PAdicRational& x) {
  PAdicRational l = frac_lambda(x);
  if (l.is_zero()) return 1.0;
  return unit_root(l.numerator(), bpow(x.p(), l.pow()));
}

cplx psi_p_ratio(int p, const bigint& num, const bigint& den) {
  FracClass c = frac_class(p, num, den);
  if (c.k == 0) return 1.0;
  return unit_root(c.n, bpow(p, c.k));
}

PAdicSDC PAdicSDC::rescaled(int e) const {
  PAdicRational c = PAdicRational::ppow(p, e);
  return {p, a * c * c, b * c};
}

std::string PAdicSDC::str() const {
  std::ostringstream os;
  os << "psi_" << p << "((" << a.str() << ")x^2/2 + (" << b.str() << ")x)";
  return os.str();
}

cplx sdc_eval(const PAdicSDC& f, const PAdicRational& x) {
  if (f.a.is_zero()) throw DegenerateError("sdc_eval: a = 0");
  PAdicRational two = PAdicRational::from_int(f.p, 2);
  PAdicRational T = f.a * x * x + two * f.b * x;  // value = T / 2
  bigint num = T.numerator(), den = 2;
  if (T.pow() >= 0)
    den *= bpow(f.p, T.pow());
  else
    num *= bpow(f.p, -T.pow());
  return psi_p_ratio(f.p, num, den);
}

long long DirichletCharData::primitive_root(int p) {
  long long phi = p - 1;
  std::vector<long long> fac;
  long long m = phi;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  auto powmod = [](long long b, long long e, long long mod) {
    __int128 r = 1, x = b % mod;
    while (e > 0) {
      if (e & 1) r = r * x % mod;
      x = x * x % mod;
      e >>= 1;
    }
    return (long long)r;
  };
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : fac)
      if (powmod(g, phi / q, p) == 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    long long p2 = (long long)p * p;
    if (powmod(g, p - 1, p2) == 1) return g + p;
    return g;
  }
  return 1;  // p = 2
}

DirichletCharData DirichletCharData::make(int p, int level, long long index) {
  if (p == 2 || !is_prime(p)) throw DomainError("DirichletCharData: p must be an odd prime");
  if (level < 1) throw DomainError("DirichletCharData: level must be >= 1");
  DirichletCharData c;
  c.p = p;
  c.level = level;
  c.generator = primitive_root(p);
  const long long M = c.modulus(), phi = c.phi();
  c.index = ((index % phi) + phi) % phi;
  c.dlog.assign(M, -1);
  long long x = 1;
  for (long long j = 0; j < phi; ++j) {
    if (c.dlog[x] != -1) throw DomainError("DirichletCharData: generator is not primitive");
    c.dlog[x] = j;
    x = (long long)((__int128)x * c.generator % M);
  }
  if (c.index == 0) {
    c.conductor_level = 0;
  } else {
    c.conductor_level = level;
    for (int m = 1; m <= level; ++m) {
      long long e = (long long)(p - 1) * ipow(p, m - 1);
      if ((__int128)c.index * e % phi == 0) {
        c.conductor_level = m;
        break;
      }
    }
  }
  return c;
}

cplx DirichletCharData::operator()(long long u) const {
  const long long M = modulus();
  long long r = ((u % M) + M) % M;
  long long j = dlog[r];
  if (j < 0) return 0.0;
  return unit_root_ll((long long)((__int128)index * j % phi()), phi());
}

cplx DirichletCharData::on_unit(const bigint& u) const {
  bigint r = mod_floor(u, bigint(modulus()));
  return (*this)(r.convert_to<long long>());
}

bool DirichletCharData::is_odd() const { return std::abs((*this)(-1) + 1.0) < 1e-9; }

DirichletCharacter DirichletCharData::primitive_character() const {
  DirichletCharacter chi;
  if (conductor_level == 0) return chi;
  long long q = ipow(p, conductor_level);
  chi.modulus = int(q);
  chi.values.assign(q, 0.0);
  for (long long n = 0; n < q; ++n)
    if (n % p != 0) chi.values[n] = (*this)(n);
  return chi;
}

std::string DirichletCharData::str() const {
  std::ostringstream os;
  os << "chi mod " << p << "^" << level << " (g=" << generator << ", t=" << index
     << ", cond=" << p << "^" << conductor_level << ")";
  return os.str();
}

std::vector<DirichletCharData> characters_mod(int p, int level) {
  DirichletCharData base = DirichletCharData::make(p, level, 0);
  std::vector<DirichletCharData> out;
  for (long long t = 0; t < base.phi(); ++t) out.push_back(DirichletCharData::make(p, level, t));
  return out;
}

int unit_average_level(const PAdicSDC& f, const PAdicRational& y, const UnitChar& chi) {
  const int vy = y.valuation();
  int m = 1;
  if (chi) m = std::max(m, chi->conductor_level);
  const int v2 = f.p == 2 ? 1 : 0;
  m = std::max(m, -f.a.valuation() - 2 * vy - v2);
  if (!f.b.is_zero()) m = std::max(m, -f.b.valuation() - vy);
  return m + (f.p == 2 ? 1 : 0);
}

namespace {

// average over x mod PM (units only when units) of e((alpha x^2 + beta x)/PK) chi(x)
cplx phase_average(long long PM, bool units, int p, long long alpha, long long beta, long long PK,
                   const DirichletCharData* chi) {
  const long long phi = chi ? chi->phi() : 1;
  const long long L = std::lcm(PK, phi);
  const long long sK = L / PK, sC = L / phi;
  const bool small = PK < (1LL << 31);
  auto expo = [&](long long x) -> long long {
    long long r;
    if (small) {
      long long xx = x % PK;
      r = (alpha * (xx * xx % PK) % PK + beta * xx % PK) % PK;
    } else {
      __int128 xx = x % PK;
      r = (long long)(((__int128)alpha * (xx * xx % PK) + (__int128)beta * xx) % PK);
    }
    long long R = r * sK;
    if (chi) R = (R + (__int128)chi->index * chi->dlog[x % chi->modulus()] % phi * sC) % L;
    return R;
  };
  long long count = 0;
  cplx sum = 0.0, comp = 0.0;
  auto add = [&](cplx term) {
    cplx yv = term - comp;
    cplx t = sum + yv;
    comp = (t - sum) - yv;
    sum = t;
  };
  if (L <= (1LL << 23)) {
    std::vector<int32_t> hist(L, 0);
    for (long long x = 0; x < PM; ++x) {
      if (units && x % p == 0) continue;
      ++count;
      ++hist[expo(x)];
    }
    // full cosets of l-th roots of unity sum to zero: strip them exactly
    long long rest = L;
    for (long long l = 2; rest > 1; ++l) {
      if (rest % l) continue;
      while (rest % l == 0) rest /= l;
      const long long step = L / l;
      for (long long r0 = 0; r0 < step; ++r0) {
        int32_t lo = hist[r0];
        for (long long i = 1; i < l && lo > 0; ++i) lo = std::min(lo, hist[r0 + i * step]);
        if (lo > 0)
          for (long long i = 0; i < l; ++i) hist[r0 + i * step] -= lo;
      }
    }
    for (long long R = 0; R < L; ++R)
      if (hist[R]) add(double(hist[R]) * unit_root_ll(R, L));
  } else {
    for (long long x = 0; x < PM; ++x) {
      if (units && x % p == 0) continue;
      ++count;
      add(unit_root_ll(expo(x), L));
    }
  }
  return sum / double(count);
}

void reduce_to_level(int p, const FracClass& A, const FracClass& B, long long& PK, long long& alpha,
                     long long& beta) {
  const int K = std::max(A.k, B.k);
  if (K > 60 / std::max(1, int(std::log2(p)))) throw DomainError("p-adic average: level too large");
  PK = ipow(p, K);
  alpha = K ? (A.n * bpow(p, K - A.k)).convert_to<long long>() % PK : 0;
  beta = K ? (B.n * bpow(p, K - B.k)).convert_to<long long>() % PK : 0;
}

}  // namespace

cplx unit_average(const PAdicSDC& f, const PAdicRational& y, const UnitChar& chi, int extra_level) {
  if (f.a.is_zero()) throw DegenerateError("unit_average: a = 0");
  if (chi && chi->p != f.p) throw DomainError("unit_average: character prime mismatch");
  const int p = f.p;
  if (y.is_zero()) return (chi && chi->index != 0) ? cplx(0.0) : cplx(1.0);
  int m = unit_average_level(f, y, chi) + extra_level;
  if (chi) m = std::max(m, chi->level);
  if (ipow(p, m) > 400000000LL) throw DomainError("unit_average: level too large");
  FracClass A, B;
  quad_classes(f, y, A, B);
  long long PK, alpha, beta;
  reduce_to_level(p, A, B, PK, alpha, beta);
  return phase_average(ipow(p, m), true, p, alpha, beta, PK, chi ? &*chi : nullptr);
}

cplx theta_integral(const PAdicSDC& f, const PAdicRational& y, int extra_level) {
  if (f.a.is_zero()) throw DegenerateError("theta_integral: a = 0");
  const int p = f.p;
  if (y.is_zero()) return 1.0;
  FracClass A, B;
  quad_classes(f, y, A, B);
  const int v2 = p == 2 ? 1 : 0;
  // A.k = -v(A) when positive
  int M = 0;
  M = std::max(M, A.k - v2);
  M = std::max(M, (A.k + 1) / 2);
  M = std::max(M, B.k);
  M += extra_level;
  if (std::max(A.k, B.k) == 0) return 1.0;
  if (ipow(p, M) > 400000000LL) throw DomainError("theta_integral: level too large");
  long long PK, alpha, beta;
  reduce_to_level(p, A, B, PK, alpha, beta);
  return phase_average(ipow(p, M), false, p, alpha, beta, PK, nullptr);
}

}  // namespace mw
