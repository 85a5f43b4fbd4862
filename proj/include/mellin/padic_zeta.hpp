#pragma once

#include <string>
#include <vector>

#include "mellin/padic.hpp"

namespace mw {

enum class FactorKind { RationalInQs, TwoTermExp, Qp2Special, VectorTheta, Vanishes, ArchClosed };

std::string kind_name(FactorKind k);

// P(X) = sum coeffs[i] X^i with X = q^{s - center}
struct ExpPoly {
  double q = 2;
  double center = 0.5;
  std::vector<cplx> coeffs;
  int degree() const { return int(coeffs.size()) - 1; }
  cplx operator()(cplx X) const;
};

struct ThetaProfile {
  int q = 2;
  int k = 0;
  int delta = 0;
  cplx gamma = 1.0;
  cplx C = 1.0;
  bool vanishes = false;
};

struct LocalFactor {
  FactorKind kind = FactorKind::RationalInQs;
  int p = 2;
  int dim = 1;             // n for Q_p^n
  ThetaProfile prof;       // k, delta, gamma (unramified) or k, delta, C (ramified)
  cplx omega = 1.0;        // ramified reflection constant
  int conductor = 0;
  bool ramified = false;
  int scale_exp = 0;       // value = q^{-scale_exp s} * core(s)
  cplx twist = 1.0;        // unramified character value at p

  cplx eval(cplx s) const;
  // (1 - twist q^{-s}) * eval(s) for unramified kinds, eval(s) otherwise
  cplx times_euler_inverse(cplx s) const;
  // zeros of eval coincide with roots of this polynomial; empty coeffs when zero-free
  ExpPoly x_polynomial() const;
  double critical_re() const { return dim / 2.0; }
  std::string describe() const;
};

// unramified profile of g = f(p^e .) with v(a_g) in {0, 1}; returns e through scale_exp
ThetaProfile theta_profile(const PAdicSDC& f, int* scale_exp = nullptr);

LocalFactor local_factor_unramified(const PAdicSDC& f);
cplx qp2_special(cplx s);
LocalFactor local_factor_ramified(const PAdicSDC& f, const DirichletCharData& chi);
cplx rho0_gauss_sum(const DirichletCharData& chi);
cplx weil_index_padic(const PAdicSDC& f);
LocalFactor padic_vector_factor(const std::vector<PAdicSDC>& fs);

// Tate rho over Q_p (d = 0); chi unramified when nullopt or of conductor 1
cplx padic_rho(int p, const UnitChar& chi, cplx s);

// unramified or ramified, chosen from chi
LocalFactor padic_local_factor(const PAdicSDC& f, const UnitChar& chi);

}  // namespace mw
