#pragma once

#include <vector>

#include "mellin/types.hpp"

namespace mw {

struct EvalQuality {
  cplx value;
  double cancellation_ratio = 1.0;  // max |partial sum| / |result|
  int terms_used = 1;
  bool precision_warning = false;   // ratio above 1e12
};

cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);
// Gamma(a) / Gamma(b), 0 when a sits on a pole of Gamma(b) and a is not a pole
cplx gamma_ratio(cplx a, cplx b);

EvalQuality hyp1f1(cplx u, double v, cplx z);
inline cplx hyp1f1_value(cplx u, double v, cplx z) { return hyp1f1(u, v, z).value; }

cplx hurwitz_zeta(cplx s, double a);
cplx riemann_zeta(cplx s);

// Dirichlet character mod q, values[n mod q]
struct DirichletCharacter {
  int modulus = 1;
  std::vector<cplx> values{cplx(1.0)};

  static DirichletCharacter trivial() { return {}; }
  cplx operator()(long long n) const;
  bool is_trivial() const;
  bool is_primitive() const;
  int parity() const;  // 0 even, 1 odd
  std::string describe() const;
};

cplx dirichlet_l(cplx s, const DirichletCharacter& chi);
cplx dirichlet_l_euler(cplx s, const DirichletCharacter& chi, long long pmax);

cplx completed_xi(cplx s);

std::vector<long long> primes_upto(long long n);

}  // namespace mw
