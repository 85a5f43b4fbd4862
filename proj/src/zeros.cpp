#include "mellin/zeros.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace mw {

std::string method_name(ZeroMethod m) {
  switch (m) {
    case ZeroMethod::CompanionRoots: return "CompanionRoots";
    case ZeroMethod::SignChange: return "SignChange";
    case ZeroMethod::WindingBisection: return "Winding+Bisection";
  }
  return "?";
}

int thread_budget() {
  int hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MW_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, hw);
  }
  return hw;
}

void parallel_for(int n, const std::function<void(int)>& body, int threads) {
  int T = threads > 0 ? threads : thread_budget();
  T = std::max(1, std::min(T, n));
  if (T == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int t = 0; t < T; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        if (failed) return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) err = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

void sort_zeros(std::vector<ZeroReport>& z) {
  std::sort(z.begin(), z.end(), [](const ZeroReport& a, const ZeroReport& b) {
    if (a.location.imag() != b.location.imag()) return a.location.imag() < b.location.imag();
    return a.location.real() < b.location.real();
  });
}

namespace {

cplx horner(const std::vector<cplx>& c, cplx x, cplx* deriv) {
  cplx r = 0.0, d = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + r;
    r = r * x + *it;
  }
  if (deriv) *deriv = d;
  return r;
}

double max_abs(const std::vector<cplx>& c) {
  double m = 0;
  for (auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

double wrap_2pi(double a) {
  a = std::fmod(a, 2 * kPi);
  if (a < 0) a += 2 * kPi;
  return a;
}

}  // namespace

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  std::vector<cplx> c = coeffs;
  const double scale = max_abs(c);
  while (!c.empty() && std::abs(c.back()) <= 1e-14 * scale) c.pop_back();
  const int N = int(c.size()) - 1;
  if (N < 1) return {};
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N, N);
  for (int i = 1; i < N; ++i) M(i, i - 1) = 1.0;
  for (int i = 0; i < N; ++i) M(i, N - 1) = -c[i] / c[N];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
  std::vector<cplx> roots;
  for (int i = 0; i < N; ++i) {
    cplx x = es.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {
      cplx d;
      cplx v = horner(c, x, &d);
      if (d == 0.0) break;
      cplx step = v / d;
      if (!finite(step) || std::abs(step) > 1e-3 * (1 + std::abs(x))) break;
      x -= step;
    }
    roots.push_back(x);
  }
  return roots;
}

bool self_inversive(const ExpPoly& P, double tol) {
  const int N = P.degree();
  if (N < 1) return false;
  const auto& c = P.coeffs;
  if (std::abs(c[0]) == 0.0) return false;
  cplx u = c[N] / std::conj(c[0]);
  if (std::abs(std::abs(u) - 1.0) > tol) return false;
  for (int i = 0; i <= N; ++i)
    if (std::abs(c[N - i] - u * std::conj(c[i])) > tol * (1 + max_abs(c))) return false;
  return true;
}

SignChangeScan sign_change_scan(const ExpPoly& P, int samples) {
  SignChangeScan out;
  const int N = P.degree();
  if (N < 1) return out;
  const auto& c = P.coeffs;
  const cplx su = std::sqrt(c[N] / std::conj(c[0]));
  auto h = [&](double phi) {
    return (std::polar(1.0, -N * phi / 2.0) * horner(c, std::polar(1.0, phi), nullptr) / su).real();
  };
  std::vector<double> phi(samples + 1), hv(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    phi[i] = 2 * kPi * (i + 0.5) / samples;
    hv[i] = h(phi[i]);
  }
  for (int i = 0; i < samples; ++i) {
    if (!(hv[i] * hv[i + 1] < 0) && hv[i] != 0.0) continue;
    if (hv[i] == 0.0) {
      out.phases.push_back(wrap_2pi(phi[i]));
      ++out.count;
      continue;
    }
    double a = phi[i], b = phi[i + 1], ha = hv[i];
    for (int it = 0; it < 80; ++it) {
      double m = 0.5 * (a + b);
      double hm = h(m);
      if (hm == 0.0) {
        a = b = m;
        break;
      }
      if ((hm < 0) == (ha < 0)) {
        a = m;
        ha = hm;
      } else {
        b = m;
      }
    }
    out.phases.push_back(wrap_2pi(0.5 * (a + b)));
    ++out.count;
  }
  return out;
}

std::vector<ZeroReport> exp_poly_roots(const LocalFactor& F) {
  if (F.kind == FactorKind::ArchClosed) throw DomainError("exp_poly_roots: archimedean factor");
  ExpPoly P = F.x_polynomial();
  std::vector<ZeroReport> out;
  if (P.degree() < 1) return out;
  const double lq = std::log(P.q);
  const double cmax = max_abs(P.coeffs);
  auto roots = poly_roots(P.coeffs);
  SignChangeScan scan;
  if (self_inversive(P, 1e-10)) scan = sign_change_scan(P);
  const bool count_ok = scan.count == P.degree();
  for (cplx X : roots) {
    ZeroReport z;
    // polynomial variable is q^{-n/2} / Z = q^{s-n/2} / twist
    double arg = wrap_2pi(std::arg(X) + std::arg(F.twist));
    z.location = cplx(P.center + std::log(std::abs(X)) / lq, arg / lq);
    z.method = ZeroMethod::CompanionRoots;
    z.residual = std::abs(P(X)) / cmax;
    bool matched = false;
    for (double ph : scan.phases) {
      double d = std::abs(ph - wrap_2pi(std::arg(X)));
      d = std::min(d, 2 * kPi - d);
      if (d < 1e-6) matched = true;
    }
    z.certified = count_ok && matched && z.residual <= 1e-10;
    out.push_back(z);
  }
  sort_zeros(out);
  return out;
}

std::vector<ZeroReport> exp_poly_roots_in(const LocalFactor& F, double t0, double t1) {
  auto base = exp_poly_roots(F);
  std::vector<ZeroReport> out;
  if (base.empty()) return out;
  const double T = 2 * kPi / std::log(double(F.p));
  for (const auto& z : base) {
    long long m0 = (long long)std::floor((t0 - z.location.imag()) / T) - 1;
    for (long long m = m0;; ++m) {
      double im = z.location.imag() + m * T;
      if (im > t1) break;
      if (im < t0) continue;
      ZeroReport w = z;
      w.location = cplx(z.location.real(), im);
      out.push_back(w);
    }
  }
  sort_zeros(out);
  return out;
}

int winding_count(const CFun& f, const Rect& r, const WindingOptions& opt) {
  if (!(r.re0 < r.re1 && r.im0 < r.im1)) throw DomainError("winding_count: empty rectangle");
  const cplx corners[5] = {{r.re0, r.im0}, {r.re1, r.im0}, {r.re1, r.im1}, {r.re0, r.im1}, {r.re0, r.im0}};
  for (cplx pole : opt.poles) {
    bool near = false;
    double x = pole.real(), y = pole.imag(), e = 1e-3;
    if (y > r.im0 - e && y < r.im1 + e && (std::abs(x - r.re0) < e || std::abs(x - r.re1) < e)) near = true;
    if (x > r.re0 - e && x < r.re1 + e && (std::abs(y - r.im0) < e || std::abs(y - r.im1) < e)) near = true;
    if (near) throw BoundaryZeroError("winding_count: declared pole near the boundary");
  }
  double fmin = INFINITY, fmax = 0;
  auto eval = [&](cplx s) {
    cplx v = f(s);
    if (!finite(v)) throw BoundaryZeroError("winding_count: non-finite value on the boundary");
    double a = std::abs(v);
    fmin = std::min(fmin, a);
    fmax = std::max(fmax, a);
    return v;
  };
  double total = 0;
  std::function<void(cplx, cplx, cplx, cplx, int)> seg = [&](cplx sa, cplx fa, cplx sb, cplx fb, int depth) {
    if (fa == 0.0 || fb == 0.0) throw BoundaryZeroError("winding_count: zero on the boundary");
    double d = std::arg(fb / fa);
    if (std::abs(d) < kPi / 4) {
      total += d;
      return;
    }
    if (depth >= opt.max_depth) throw NonIntegerWindingError("winding_count: adaptivity exhausted");
    cplx sm = 0.5 * (sa + sb);
    cplx fm = eval(sm);
    seg(sa, fa, sm, fm, depth + 1);
    seg(sm, fm, sb, fb, depth + 1);
  };
  for (int e = 0; e < 4; ++e) {
    cplx a = corners[e], b = corners[e + 1];
    const int n = opt.initial_per_edge;
    cplx sp = a, fp = eval(a);
    for (int i = 1; i <= n; ++i) {
      cplx sn = a + (b - a) * (double(i) / n);
      cplx fn = eval(sn);
      seg(sp, fp, sn, fn, 0);
      sp = sn;
      fp = fn;
    }
  }
  if (fmin < opt.boundary_rel_tol * fmax) throw BoundaryZeroError("winding_count: near-zero on the boundary");
  double w = total / (2 * kPi);
  long long k = std::llround(w);
  if (std::abs(w - k) > 1e-3) throw NonIntegerWindingError("winding_count: non-integer winding");
  return int(k);
}

bool newton_refine(const CFun& f, cplx& s, int max_iter) {
  double last = INFINITY;
  for (int it = 0; it < max_iter; ++it) {
    cplx v = f(s);
    if (v == 0.0) return true;
    const double h = 1e-6 * std::max(1.0, std::abs(s));
    cplx d = (f(s + h) - f(s - h)) / (2 * h);
    if (d == 0.0 || !finite(d)) return false;
    cplx step = v / d;
    if (!finite(step)) return false;
    if (std::abs(step) > 0.5) step *= 0.5 / std::abs(step);
    s -= step;
    last = std::abs(step);
    if (last < 1e-15 * std::max(1.0, std::abs(s))) return true;
  }
  return last < 1e-10;
}

int winding_count_tiled(const CFun& f, double re0, double re1, double t0, double t1, double h,
                        const WindingOptions& opt) {
  int total = 0;
  double lo = t0;
  while (lo < t1) {
    double hi = std::min(t1, lo + h);
    for (int attempt = 0;; ++attempt) {
      try {
        total += winding_count(f, {re0, re1, lo, hi}, opt);
        break;
      } catch (const BoundaryZeroError&) {
        if (attempt > 8 || hi >= t1) throw;
        hi = std::min(t1, hi + 0.0137);
      }
    }
    lo = hi;
  }
  return total;
}

std::vector<ZeroReport> line_zeros(const CFun& f, double re, double t0, double t1, double step,
                                   const LineScanOptions& opt) {
  if (!(step > 0)) throw DomainError("line_zeros: step must be positive");
  if (t1 < t0) std::swap(t0, t1);
  const int n = int(std::ceil((t1 - t0) / step)) + 1;
  std::vector<double> mag(n);
  parallel_for(n, [&](int i) { mag[i] = std::abs(f(cplx(re, t0 + i * step))); }, opt.threads);
  std::vector<int> mins;
  for (int i = 1; i + 1 < n; ++i)
    if (mag[i] < mag[i - 1] && mag[i] <= mag[i + 1]) mins.push_back(i);
  std::vector<ZeroReport> found(mins.size());
  std::vector<char> keep(mins.size(), 0);
  parallel_for(int(mins.size()), [&](int k) {
    const int i = mins[k];
    cplx s(re, t0 + i * step);
    if (!newton_refine(f, s)) return;
    const double scale = std::max({mag[i - 1], mag[i + 1], 1e-300});
    const double res = std::abs(f(s)) / scale;
    if (!(res <= opt.accept_rel)) return;
    if (s.imag() < t0 || s.imag() > t1) return;
    ZeroReport z;
    z.location = s;
    z.method = ZeroMethod::WindingBisection;
    z.residual = res;
    try {
      const double h = opt.cert_half;
      z.multiplicity = winding_count(f, {s.real() - h, s.real() + h, s.imag() - h, s.imag() + h});
      z.certified = z.multiplicity >= 1 && res <= 1e-8;
    } catch (const Error&) {
      z.certified = false;
    }
    if (z.multiplicity < 1) z.multiplicity = 1;
    found[k] = z;
    keep[k] = 1;
  }, opt.threads);
  std::vector<ZeroReport> out;
  for (size_t k = 0; k < found.size(); ++k) {
    if (!keep[k]) continue;
    bool dup = false;
    for (auto& z : out)
      if (std::abs(z.location - found[k].location) < 1e-7) dup = true;
    if (!dup) out.push_back(found[k]);
  }
  sort_zeros(out);
  return out;
}

}  // namespace mw
