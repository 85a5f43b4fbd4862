#include "mellin/oracle.hpp"

#include <cmath>

#include "mellin/quad.hpp"
#include "mellin/specfun.hpp"
#include "mellin/zeros.hpp"

namespace mw {

namespace {

int absval(const PAdicRational& x) { return x.is_zero() ? 0 : std::abs(x.valuation()); }

}  // namespace

PadicMellinOracle::PadicMellinOracle(const PAdicSDC& f, const UnitChar& chi, const PadicOracleParams& params)
    : p_(f.p) {
  if (f.a.is_zero()) throw DegenerateError("oracle: a = 0");
  const int cond = chi ? chi->conductor_level : 0;
  const int J = absval(f.a) + absval(f.b) + cond + 2 + (f.p == 2 ? 1 : 0);
  jmin_ = params.j_min == INT_MIN ? -J : params.j_min;
  jmax_ = params.j_max == INT_MIN ? J : params.j_max;
  if (jmin_ > jmax_) throw DomainError("oracle: j_min > j_max");
  tail_ = (chi && chi->ramified()) ? cplx(0.0) : cplx(1.0);
  for (int j = jmin_; j <= jmax_; ++j)
    terms_.push_back(unit_average(f, PAdicRational::ppow(f.p, j), chi, params.level_margin - 1));
  check_guards(params.vanish_guard);
}

PadicMellinOracle::PadicMellinOracle(const std::vector<PAdicSDC>& fs, const PadicOracleParams& params) {
  if (fs.empty()) throw DomainError("oracle: empty list");
  p_ = fs[0].p;
  int J = 2 + (p_ == 2 ? 1 : 0);
  int extra = 0;
  for (const auto& f : fs) extra = std::max(extra, absval(f.a) + absval(f.b));
  J += extra;
  jmin_ = params.j_min == INT_MIN ? -J : params.j_min;
  jmax_ = params.j_max == INT_MIN ? J : params.j_max;
  const double qn = std::pow(double(p_), -double(fs.size()));
  tail_ = 1.0 - qn;
  std::vector<cplx> Theta;
  for (int j = jmin_; j <= jmax_ + 1; ++j) {
    cplx t = 1.0;
    for (const auto& f : fs) t *= theta_integral(f, PAdicRational::ppow(p_, j), params.level_margin - 1);
    Theta.push_back(t);
  }
  for (size_t i = 0; i + 1 < Theta.size(); ++i) terms_.push_back(Theta[i] - qn * Theta[i + 1]);
  check_guards(params.vanish_guard);
}

void PadicMellinOracle::check_guards(int guard) {
  const int n = int(terms_.size());
  if (guard > n) throw SupportEscapeError("oracle: scan range shorter than the guard");
  for (int i = 0; i < guard; ++i) {
    if (std::abs(terms_[i]) > 1e-11)
      throw SupportEscapeError("oracle: support reaches the lower end of the scan range");
    if (std::abs(terms_[n - 1 - i] - tail_) > 1e-11)
      throw SupportEscapeError("oracle: terms not constant at the upper end of the scan range");
  }
}

cplx PadicMellinOracle::operator()(cplx s) const {
  if (s.real() <= 0) throw DomainError("oracle: Re s must be positive");
  const cplx Z = std::exp(-s * std::log(double(p_)));
  cplx sum = 0.0;
  cplx zj = std::pow(Z, jmin_);
  for (const cplx& t : terms_) {
    sum += t * zj;
    zj *= Z;
  }
  // zj = Z^{jmax+1}
  if (tail_ != 0.0) sum += tail_ * zj / (1.0 - Z);
  return sum;
}

cplx oracle_padic_mellin(const PAdicSDC& f, const UnitChar& chi, cplx s, const PadicOracleParams& params) {
  return PadicMellinOracle(f, chi, params)(s);
}

cplx oracle_padic_vector(const std::vector<PAdicSDC>& fs, cplx s, const PadicOracleParams& params) {
  return PadicMellinOracle(fs, params)(s);
}


// ---- archimedean

namespace {

constexpr int kSeriesTerms = 64;

double cutoff(double damp, double eps, double reP, double R0) {
  // e^{-damp eps R^2} R^{Re P - 1} below e^{-40}
  double R = std::sqrt(40.0 / (damp * eps));
  for (int i = 0; i < 3; ++i) R = std::sqrt((40.0 + std::max(0.0, reP - 1.0) * std::log(R)) / (damp * eps));
  return std::max(R, R0);
}

double head_delta(std::initializer_list<double> scales) {
  double d = 1.0;
  for (double x : scales)
    if (x > 0) d = std::min(d, x);
  return d;
}

// J_n for any integer order
double jn_int(int n, double x) {
  double v = bessel_j(double(std::abs(n)), x);
  return (n < 0 && (n % 2)) ? -v : v;
}

Series bessel_int_series(int n, double beta, int power, int N) {
  Series c = series_bessel(std::abs(n), beta, power, N);
  if (n < 0 && (n % 2))
    for (auto& x : c) x = -x;
  return c;
}

cplx minus_i_pow(int k) {
  static const cplx t[4] = {1.0, -kI, -1.0, kI};
  return t[((k % 4) + 4) % 4];
}

}  // namespace

ArchOracleResult richardson(const std::vector<double>& schedule, const std::function<cplx(double)>& at_eps) {
  if (schedule.empty()) throw DomainError("richardson: empty schedule");
  for (size_t i = 0; i < schedule.size(); ++i)
    if (!(schedule[i] > 0) || (i && !(schedule[i] < schedule[i - 1])))
      throw DomainError("richardson: schedule must be positive and strictly decreasing");
  ArchOracleResult r;
  r.per_eps.resize(schedule.size());
  parallel_for(int(schedule.size()), [&](int i) { r.per_eps[i] = at_eps(schedule[i]); });
  // Neville extrapolation to eps = 0 through all points
  std::vector<cplx> T = r.per_eps;
  const size_t m = T.size();
  for (size_t k = 1; k < m; ++k)
    for (size_t i = m - 1; i >= k; --i) {
      const double ei = schedule[i], ek = schedule[i - k];
      T[i] = (ek * T[i] - ei * T[i - 1]) / (ek - ei);
    }
  r.value = T[m - 1];
  return r;
}

ArchOracleResult oracle_real_mellin_full(double a, double b, cplx s, bool odd, const ArchOracleParams& params) {
  if (a == 0) throw DegenerateError("oracle_real_mellin: a = 0");
  if (!(s.real() > 0 && s.real() < 3)) throw DomainError("oracle_real_mellin: need 0 < Re s < 3");
  auto at = [&](double eps) {
    RadialIntegral I;
    I.P = s;
    const cplx kappa = kPi * cplx(eps, a);
    const double beta = 2 * kPi * b;
    I.delta = head_delta({0.25 / std::sqrt(std::abs(kappa)), std::abs(beta) > 0 ? 0.25 / std::abs(beta) : 0});
    Series h = odd ? series_sin(beta, kSeriesTerms) : series_cos(beta, kSeriesTerms);
    for (auto& x : h) x *= odd ? cplx(0, -2) : cplx(2, 0);
    I.head = series_mul(series_exp_quad(kappa, kSeriesTerms), h);
    I.g = [=](double r) {
      cplx hv = odd ? cplx(0, -2 * std::sin(beta * r)) : cplx(2 * std::cos(beta * r), 0);
      return std::exp(-kappa * r * r) * hv;
    };
    I.freq = [=](double r) { return 2 * kPi * std::abs(a) * r + std::abs(beta); };
    I.R = params.cutoff_R > 0 ? params.cutoff_R : cutoff(kPi, eps, s.real(), 30 / std::sqrt(std::abs(a)));
    I.abs_tol = params.abs_tol;
    return radial_integral(I);
  };
  return richardson(params.epsilon_schedule, at);
}

cplx oracle_real_mellin(double a, double b, cplx s, bool odd, const ArchOracleParams& params) {
  return oracle_real_mellin_full(a, b, s, odd, params).value;
}

ArchOracleResult oracle_complex_hermitian_full(double a, cplx b, cplx s, int n, const ArchOracleParams& params) {
  if (!(a > 0)) throw DomainError("oracle_complex_hermitian: a must be positive");
  if (!(s.real() > 0 && s.real() < 1.5)) throw DomainError("oracle_complex_hermitian: need 0 < Re s < 3/2");
  const double bm = std::abs(b);
  if (bm == 0 && n != 0) return ArchOracleResult{0.0, {0.0}};
  // angular integral: 4 pi (-i)^n e^{-i n arg b} J_n(4 pi |b| r), measure 2 dx dy / |z|^2
  const cplx ang = 4 * kPi * minus_i_pow(n) * std::polar(1.0, -n * std::arg(b));
  const double beta = 4 * kPi * bm;
  auto at = [&](double eps) {
    RadialIntegral I;
    I.P = 2.0 * s;
    const cplx kappa = 2 * kPi * cplx(eps, a);
    I.delta = head_delta({0.25 / std::sqrt(std::abs(kappa)), beta > 0 ? 0.25 / beta : 0});
    Series h = bessel_int_series(n, beta, 1, kSeriesTerms);
    for (auto& x : h) x *= ang;
    I.head = series_mul(series_exp_quad(kappa, kSeriesTerms), h);
    I.g = [=](double r) { return std::exp(-kappa * r * r) * ang * jn_int(n, beta * r); };
    I.freq = [=](double r) { return 4 * kPi * a * r + beta; };
    I.R = params.cutoff_R > 0 ? params.cutoff_R : cutoff(2 * kPi, eps, 2 * s.real(), 30 / std::sqrt(a));
    I.abs_tol = params.abs_tol;
    return radial_integral(I);
  };
  return richardson(params.epsilon_schedule, at);
}

cplx oracle_complex_hermitian(double a, cplx b, cplx s, int n, const ArchOracleParams& params) {
  return oracle_complex_hermitian_full(a, b, s, n, params).value;
}

namespace {

// int_C psi_C(a z^2/2 + b z) |z|^{2s-2} 2 dx dy through |z|^{2s-2} = Gamma(1-s)^{-1} int t^{-s} e^{-t|z|^2} dt
cplx square_schwinger(cplx a, cplx b, cplx s, double abs_tol) {
  if (!(s.real() > 0 && s.real() < 1)) throw DomainError("oracle_complex_square: need 0 < Re s < 1 when b != 0");
  const double A = std::abs(a);
  const cplx bp = b * std::polar(1.0, -std::arg(a) / 2);
  auto G = [](cplx al, cplx be) { return std::sqrt(kPi / al) * std::exp(be * be / (4.0 * al)); };
  RFun f = [&](double x) {
    double t = std::exp(x);
    cplx I = 2.0 * G(cplx(t, 2 * kPi * A), cplx(0, 4 * kPi * bp.real())) *
             G(cplx(t, -2 * kPi * A), cplx(0, -4 * kPi * bp.imag()));
    return std::exp((1.0 - s) * x) * I;
  };
  // tails decay like e^{-(1 - Re s) |x|} and e^{-Re s x}
  const double lo = -45.0 / (1.0 - s.real()), hi = 45.0 / s.real();
  std::vector<cplx> parts;
  const int panels = int(std::ceil((hi - lo) / 0.5));
  parts.resize(panels);
  parallel_for(panels, [&](int i) {
    double x0 = lo + (hi - lo) * i / panels, x1 = lo + (hi - lo) * (i + 1) / panels;
    parts[i] = gk_adaptive(f, x0, x1, abs_tol / panels);
  });
  return pairwise_sum(parts) / gamma_fn(1.0 - s);
}

}  // namespace

ArchOracleResult oracle_complex_square_full(cplx a, cplx b, cplx s, int n, const ArchOracleParams& params) {
  if (a == 0.0) throw DegenerateError("oracle_complex_square: a = 0");
  if (b != 0.0) {
    if (n != 0) throw DomainError("oracle_complex_square: b != 0 requires n = 0");
    cplx v = square_schwinger(a, b, s, params.abs_tol);
    return ArchOracleResult{v, {v}};
  }
  if (!(s.real() > 0 && s.real() < 1.5)) throw DomainError("oracle_complex_square: need 0 < Re s < 3/2");
  if (n % 2) return ArchOracleResult{0.0, {0.0}};
  const int m = n / 2;
  const double A = std::abs(a);
  // angular integral: 4 pi (-i)^m e^{-i m arg a} J_m(2 pi |a| r^2); damping e^{-2 pi eps r^2}
  const cplx ang = 4 * kPi * minus_i_pow(m) * std::polar(1.0, -m * std::arg(a));
  const double beta = 2 * kPi * A;
  auto at = [&](double eps) {
    RadialIntegral I;
    I.P = 2.0 * s;
    const cplx kappa = 2 * kPi * eps;
    I.delta = head_delta({0.25 / std::sqrt(std::abs(kappa)), 0.5 / std::sqrt(beta)});
    Series h = bessel_int_series(m, beta, 2, kSeriesTerms);
    for (auto& x : h) x *= ang;
    I.head = series_mul(series_exp_quad(kappa, kSeriesTerms), h);
    I.g = [=](double r) { return std::exp(-kappa * r * r) * ang * jn_int(m, beta * r * r); };
    I.freq = [=](double r) { return 2 * beta * r; };
    I.R = params.cutoff_R > 0 ? params.cutoff_R : cutoff(2 * kPi, eps, 2 * s.real(), 30 / std::sqrt(A));
    I.abs_tol = params.abs_tol;
    return radial_integral(I);
  };
  return richardson(params.epsilon_schedule, at);
}

cplx oracle_complex_square(cplx a, cplx b, cplx s, int n, const ArchOracleParams& params) {
  return oracle_complex_square_full(a, b, s, n, params).value;
}

ArchOracleResult oracle_rn_radial_full(int n, double a, double bnorm, cplx s, const ArchOracleParams& params) {
  if (n < 1) throw DomainError("oracle_rn_radial: n must be positive");
  if (a == 0) throw DegenerateError("oracle_rn_radial: a = 0");
  if (!(s.real() > 0 && s.real() < (n + 1) / 2.0 + 1))
    throw DomainError("oracle_rn_radial: Re s outside the convergence band");
  // sphere integral (2 pi)^{n/2} rho^{1-n/2} J_{n/2-1}(rho), rho = 2 pi |b| r
  const double beta = 2 * kPi * bnorm;
  const double nu = n / 2.0 - 1.0;
  const double pref = std::pow(2 * kPi, n / 2.0);
  auto sphere = [=](double r) -> double {
    double rho = beta * r;
    if (rho < 1e-3) {
      double acc = 0, t = std::pow(2.0, -nu) / std::tgamma(nu + 1.0);
      for (int m = 0; m < 8; ++m) {
        acc += (m % 2 ? -t : t) * std::pow(rho / 2, 2 * m);
        t /= (m + 1.0) * (m + 1.0 + nu);
      }
      return pref * acc;
    }
    if (n == 1) return pref * std::sqrt(2 / kPi) * std::cos(rho);
    return pref * std::pow(rho, -nu) * bessel_j(nu, rho);
  };
  auto at = [&](double eps) {
    RadialIntegral I;
    I.P = s;
    const cplx kappa = kPi * cplx(eps, a);
    I.delta = head_delta({0.25 / std::sqrt(std::abs(kappa)), beta > 0 ? 0.25 / beta : 0});
    Series h = series_sphere_kernel(n, beta, kSeriesTerms);
    for (auto& x : h) x *= pref;
    I.head = series_mul(series_exp_quad(kappa, kSeriesTerms), h);
    I.g = [=](double r) { return std::exp(-kappa * r * r) * sphere(r); };
    I.freq = [=](double r) { return 2 * kPi * std::abs(a) * r + beta; };
    I.R = params.cutoff_R > 0 ? params.cutoff_R : cutoff(kPi, eps, s.real(), 30 / std::sqrt(std::abs(a)));
    I.abs_tol = params.abs_tol;
    return radial_integral(I);
  };
  return richardson(params.epsilon_schedule, at);
}

cplx oracle_rn_radial(int n, double a, double bnorm, cplx s, const ArchOracleParams& params) {
  return oracle_rn_radial_full(n, a, bnorm, s, params).value;
}

}  // namespace mw
