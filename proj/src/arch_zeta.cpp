#include "mellin/arch_zeta.hpp"

#include <cstdlib>

#include "mellin/specfun.hpp"

namespace mw {

namespace {

cplx cpow(double x, cplx e) { return std::exp(e * std::log(x)); }

// Gamma(u) pi^{-u}, zero never; poles propagate
cplx gamma_pi(cplx u) { return std::exp(log_gamma(u) - u * std::log(kPi)); }

cplx ipow_minus_i(int k) {
  static const cplx t[4] = {1.0, -kI, -1.0, kI};
  return t[((k % 4) + 4) % 4];
}

}  // namespace

cplx zeta_real(const RealSDC& f, cplx s, bool odd) {
  if (f.a == 0) throw DegenerateError("zeta_real: a = 0");
  if (f.a < 0) return std::conj(zeta_real({-f.a, -f.b}, std::conj(s), odd));
  const double a = f.a, b = f.b;
  const cplx z(0.0, kPi * b * b / a);
  if (std::abs(z) > 40) throw DomainError("zeta_real: |pi b^2 / a| > 40");
  if (!odd) {
    cplx u = s / 2.0;
    return std::exp(-s * kPi * kI / 4.0) * cpow(a, -u) * gamma_pi(u) * hyp1f1_value(u, 0.5, z);
  }
  if (b == 0) return 0.0;
  cplx u = (s + 1.0) / 2.0;
  return -2.0 * kPi * kI * b * std::exp(-(s + 1.0) * kPi * kI / 4.0) * cpow(a, -u) * gamma_pi(u) *
         hyp1f1_value(u, 1.5, z);
}

cplx zeta_complex_hermitian(const HermitianSDC& f, cplx s, int n) {
  if (!(f.a > 0)) throw DomainError("zeta_complex_hermitian: a must be positive");
  if (n < 0) return zeta_complex_hermitian({f.a, std::conj(f.b)}, s, -n);
  const double a = f.a;
  const double b2 = std::norm(f.b);
  const cplx z(0.0, 2 * kPi * b2 / a);
  if (std::abs(z) > 40) throw DomainError("zeta_complex_hermitian: |2 pi |b|^2 / a| > 40");
  if (n > 0 && f.b == 0.0) return 0.0;
  const cplx u = s + n / 2.0;
  cplx pre = std::exp(-kPi * kI / 2.0 * (s - n / 2.0)) * cpow(a, -s) *
             std::exp(log_gamma(u) + (1.0 - s) * std::log(2 * kPi));
  if (n > 0) {
    cplx w = std::sqrt(2 * kPi / a) * std::conj(f.b);
    cplx t = 1.0;
    for (int j = 1; j <= n; ++j) t *= w / double(j);
    pre *= (n % 2 ? -1.0 : 1.0) * t;
  }
  return pre * hyp1f1_value(u, 1.0 + n, z);
}

cplx zeta_complex_square(const SquareSDC& f, cplx s, int n) {
  if (f.a == 0.0) throw DegenerateError("zeta_complex_square: a = 0");
  const double A = std::abs(f.a);
  const double arg = std::arg(f.a);
  if (f.b == 0.0) {
    if (n % 2) return 0.0;
    const int m = n / 2;
    const int am = std::abs(m);
    const cplx ca = std::polar(1.0, -m * arg);  // c_{-n/2}(a)
    return cpow(A, -s) * ca * ipow_minus_i(am) * cpow(kPi, 1.0 - s) *
           gamma_ratio(s / 2.0 + am / 2.0, 1.0 - s / 2.0 + am / 2.0);
  }
  if (n != 0) throw DomainError("zeta_complex_square: b != 0 requires n = 0");
  const cplx b = f.b / std::polar(std::sqrt(A), arg / 2);
  const cplx b2 = b * b;
  if (kPi * std::abs(b2) > 40) throw DomainError("zeta_complex_square: |pi b^2 / a| > 40");
  const cplx z1 = kI * kPi * b2, z2 = kI * kPi * std::conj(b2);
  const cplx u1 = s / 2.0, u2 = (s + 1.0) / 2.0;
  cplx S1 = gamma_ratio(u1, 1.0 - u1) * hyp1f1_value(u1, 0.5, z1) * hyp1f1_value(u1, 0.5, z2);
  cplx S2 = -4 * kPi * std::norm(b) * gamma_ratio(u2, 1.0 - u2) * hyp1f1_value(u2, 1.5, z1) *
            hyp1f1_value(u2, 1.5, z2);
  return cpow(A, -s) * cpow(kPi, 1.0 - s) * (S1 + S2);
}

cplx zeta_rn_radial(const RadialSDC& f, cplx s) {
  if (f.n < 1) throw DomainError("zeta_rn_radial: n must be positive");
  if (!(f.a > 0)) throw DomainError("zeta_rn_radial: a must be positive");
  if (f.bnorm < 0) throw DomainError("zeta_rn_radial: |b| must be non-negative");
  const cplx z(0.0, kPi * f.bnorm * f.bnorm / f.a);
  if (std::abs(z) > 40) throw DomainError("zeta_rn_radial: |pi |b|^2 / a| > 40");
  const double h = f.n / 2.0;
  const cplx u = s / 2.0;
  return std::exp(-kI * kPi * s / 4.0) * cpow(f.a, -u) * std::pow(kPi, h) / std::tgamma(h) * gamma_pi(u) *
         hyp1f1_value(u, h, z);
}

cplx weil_index_real(const RealSDC& f) {
  if (f.a == 0) throw DegenerateError("weil_index_real: a = 0");
  // e^{-sign(a) i pi/4} psi_R(-b^2/2a)
  return expipi(f.a > 0 ? -0.25 : 0.25) * expipi(f.b * f.b / f.a);
}

cplx weil_index_hermitian(const HermitianSDC& f) {
  if (f.a == 0) throw DegenerateError("weil_index_hermitian: a = 0");
  return expipi(f.a > 0 ? -0.5 : 0.5) * expipi(2 * std::norm(f.b) / f.a);
}

cplx weil_index_square(const SquareSDC& f) {
  if (f.a == 0.0) throw DegenerateError("weil_index_square: a = 0");
  return expipi(2 * (f.b * f.b / f.a).real());
}

cplx tate_rho_real(cplx s, bool odd) {
  if (!odd) return gamma_pi(s / 2.0) / gamma_pi((1.0 - s) / 2.0);
  return kI * gamma_pi((s + 1.0) / 2.0) / gamma_pi((2.0 - s) / 2.0);
}

cplx tate_rho_real_from_fe(const RealSDC& f, cplx s, bool odd) {
  const double chi_a = (odd && f.a < 0) ? -1.0 : 1.0;
  cplx den = chi_a * weil_index_real(f) * cpow(std::abs(f.a), 0.5 - s) *
             std::conj(zeta_real(f, 1.0 - std::conj(s), odd));
  if (std::abs(den) == 0) throw PoleError("tate_rho_real_from_fe: reflected value vanishes");
  return zeta_real(f, s, odd) / den;
}

cplx tate_rho_complex(cplx s, int n) {
  const int an = std::abs(n);
  return ipow_minus_i(an) * cpow(2 * kPi, 1.0 - 2.0 * s) * gamma_ratio(s + an / 2.0, 1.0 - s + an / 2.0);
}

double real_fe_residual(const RealSDC& f, cplx s, bool odd) {
  cplx lhs = zeta_real(f, s, odd);
  const double chi_a = (odd && f.a < 0) ? -1.0 : 1.0;
  cplx rhs = chi_a * weil_index_real(f) * tate_rho_real(s, odd) * cpow(std::abs(f.a), 0.5 - s) *
             std::conj(zeta_real(f, 1.0 - std::conj(s), odd));
  return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

}  // namespace mw
