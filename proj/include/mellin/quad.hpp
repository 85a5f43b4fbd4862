#pragma once

#include <functional>
#include <vector>

#include "mellin/types.hpp"

namespace mw {

using RFun = std::function<cplx(double)>;

// adaptive Gauss-Kronrod 7-15
cplx gk_adaptive(const RFun& f, double a, double b, double abs_tol, int max_depth = 24);

// truncated Taylor coefficients c_j of analytic functions at 0
using Series = std::vector<cplx>;
Series series_mul(const Series& a, const Series& b);
Series series_exp_quad(cplx kappa, int N);                  // e^{-kappa r^2}
Series series_cos(double beta, int N);                      // cos(beta r)
Series series_sin(double beta, int N);                      // sin(beta r)
Series series_bessel(int nu, double beta, int power, int N);  // J_nu(beta r^power), nu >= 0
// rho^{1-n/2} J_{n/2-1}(rho) with rho = beta r
Series series_sphere_kernel(int n, double beta, int N);

// int_0^R r^{P-1} g(r) dr; g given in closed form and by its Taylor series on [0, delta]
struct RadialIntegral {
  cplx P;
  RFun g;
  Series head;
  double delta = 0.1;
  std::function<double(double)> freq;  // bound on the phase derivative of g at r
  double R = 30;
  double abs_tol = 1e-8;
};
cplx radial_integral(const RadialIntegral& I);

// J_nu(x), x >= 0; Hankel expansion for large x
double bessel_j(double nu, double x);

// pairwise sum for deterministic reductions
cplx pairwise_sum(const std::vector<cplx>& v);

}  // namespace mw
