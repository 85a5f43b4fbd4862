#include "mellin/quad.hpp"

#include <cmath>

namespace mw {

namespace {

const double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

cplx gk15(const RFun& f, double a, double b, double* err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx fc = f(c);
  cplx resk = fc * kWgk[7];
  cplx resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    cplx f1 = f(c - x), f2 = f(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  *err = std::abs((resk - resg) * h);
  return resk * h;
}

cplx gk_rec(const RFun& f, double a, double b, double tol, int depth) {
  double err;
  cplx v = gk15(f, a, b, &err);
  if (err <= tol || !finite(v)) {
    if (!finite(v)) throw QuadratureError("quadrature: non-finite integrand");
    return v;
  }
  if (depth <= 0) throw QuadratureError("quadrature: panel budget exhausted");
  double m = 0.5 * (a + b);
  return gk_rec(f, a, m, 0.5 * tol, depth - 1) + gk_rec(f, m, b, 0.5 * tol, depth - 1);
}

}  // namespace

cplx gk_adaptive(const RFun& f, double a, double b, double abs_tol, int max_depth) {
  return gk_rec(f, a, b, abs_tol, max_depth);
}

cplx pairwise_sum(const std::vector<cplx>& v) {
  std::vector<cplx> w = v;
  if (w.empty()) return 0.0;
  while (w.size() > 1) {
    std::vector<cplx> n((w.size() + 1) / 2);
    for (size_t i = 0; i < n.size(); ++i) n[i] = w[2 * i] + (2 * i + 1 < w.size() ? w[2 * i + 1] : 0.0);
    w.swap(n);
  }
  return w[0];
}

double bessel_j(double nu, double x) {
  if (x < 25 || nu > 10) return std::cyl_bessel_j(nu, x);
  const double mu = 4 * nu * nu;
  double P = 0, Q = 0, t = 1;
  for (int k = 0; k < 80; ++k) {
    if (k > 0) t *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * x);
    switch (k % 4) {
      case 0: P += t; break;
      case 1: Q += t; break;
      case 2: P -= t; break;
      default: Q -= t;
    }
    if (std::abs(t) < 1e-17) break;
  }
  const double w = x - (nu / 2 + 0.25) * kPi;
  return std::sqrt(2 / (kPi * x)) * (P * std::cos(w) - Q * std::sin(w));
}

Series series_mul(const Series& a, const Series& b) {
  const size_t N = std::min(a.size(), b.size());
  Series c(N, 0.0);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; i + j < N; ++j) c[i + j] += a[i] * b[j];
  return c;
}

Series series_exp_quad(cplx kappa, int N) {
  Series c(N, 0.0);
  cplx t = 1.0;
  for (int m = 0; 2 * m < N; ++m) {
    c[2 * m] = t;
    t *= -kappa / double(m + 1);
  }
  return c;
}

Series series_cos(double beta, int N) {
  Series c(N, 0.0);
  double t = 1.0;
  for (int j = 0; j < N; ++j) {
    if (j % 4 == 0) c[j] = t;
    if (j % 4 == 2) c[j] = -t;
    t *= beta / (j + 1);
  }
  return c;
}

Series series_sin(double beta, int N) {
  Series c(N, 0.0);
  double t = 1.0;
  for (int j = 0; j < N; ++j) {
    if (j % 4 == 1) c[j] = t;
    if (j % 4 == 3) c[j] = -t;
    t *= beta / (j + 1);
  }
  return c;
}

Series series_bessel(int nu, double beta, int power, int N) {
  Series c(N, 0.0);
  // J_nu(x) = sum (-1)^m (x/2)^{2m+nu} / (m! (m+nu)!)
  double t = std::pow(beta / 2, nu) / std::tgamma(nu + 1.0);
  for (int m = 0;; ++m) {
    int deg = power * (2 * m + nu);
    if (deg >= N) break;
    c[deg] = (m % 2 ? -t : t);
    t *= (beta / 2) * (beta / 2) / ((m + 1.0) * (m + 1.0 + nu));
  }
  return c;
}

Series series_sphere_kernel(int n, double beta, int N) {
  // (2/rho)^{n/2-1} J_{n/2-1}(rho) = sum (-1)^m (rho/2)^{2m} / (m! Gamma(m+n/2)); scaled by 2^{1-n/2}
  Series c(N, 0.0);
  const double nu = n / 2.0 - 1.0;
  double t = std::pow(2.0, -nu) / std::tgamma(nu + 1.0);
  for (int m = 0; 2 * m < N; ++m) {
    c[2 * m] = (m % 2 ? -t : t);
    t *= (beta / 2) * (beta / 2) / ((m + 1.0) * (m + 1.0 + nu));
  }
  return c;
}

cplx radial_integral(const RadialIntegral& I) {
  if (I.P.real() <= 0) throw DomainError("radial_integral: Re P must be positive");
  cplx head = 0.0;
  const double d = I.delta;
  for (size_t j = 0; j < I.head.size(); ++j) {
    cplx e = I.P + double(j);
    head += I.head[j] * std::exp(e * std::log(d)) / e;
  }
  RFun f = [&](double r) { return std::exp((I.P - 1.0) * std::log(r)) * I.g(r); };
  std::vector<double> edges{d};
  double r = d;
  while (r < I.R) {
    double w = (kPi / 2) / std::max(I.freq(r), 1e-12);
    w = std::min(w, std::max(r, d));
    r = std::min(I.R, r + w);
    edges.push_back(r);
  }
  const double tol = I.abs_tol / std::max<size_t>(1, edges.size());
  std::vector<cplx> parts(edges.size() - 1);
  for (size_t i = 0; i + 1 < edges.size(); ++i) parts[i] = gk_adaptive(f, edges[i], edges[i + 1], tol);
  return head + pairwise_sum(parts);
}

}  // namespace mw
