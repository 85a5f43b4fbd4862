#pragma once

#include "mellin/types.hpp"

namespace mw {

// f(x) = psi_R(a x^2/2 + b x), psi_R(x) = e^{-2 pi i x}
struct RealSDC {
  double a = 1, b = 0;
};
// f(z) = psi_C(a |z|^2 / 2 + b z), a > 0
struct HermitianSDC {
  double a = 1;
  cplx b = 0.0;
};
// f(z) = psi_C(a z^2 / 2 + b z)
struct SquareSDC {
  cplx a = 1.0, b = 0.0;
};
// f(x) = psi_R(a |x|^2 / 2 + <b, x>) on R^n, only |b| matters
struct RadialSDC {
  int n = 1;
  double a = 1, bnorm = 0;
};

// odd: the sign character
cplx zeta_real(const RealSDC& f, cplx s, bool odd = false);
cplx zeta_complex_hermitian(const HermitianSDC& f, cplx s, int n = 0);
cplx zeta_complex_square(const SquareSDC& f, cplx s, int n = 0);
cplx zeta_rn_radial(const RadialSDC& f, cplx s);

cplx weil_index_real(const RealSDC& f);
cplx weil_index_hermitian(const HermitianSDC& f);
cplx weil_index_square(const SquareSDC& f);

// Tate rho over R: Gamma_R quotients, i for the sign character
cplx tate_rho_real(cplx s, bool odd = false);
// same quantity recovered from the local functional equation of f
cplx tate_rho_real_from_fe(const RealSDC& f, cplx s, bool odd = false);
cplx tate_rho_complex(cplx s, int n);

// zeta_f(s) - chi(a) gamma_f rho(s) |a|^{1/2-s} conj(zeta_f(1 - conj s)), relative
double real_fe_residual(const RealSDC& f, cplx s, bool odd = false);

}  // namespace mw
