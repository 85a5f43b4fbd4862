#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mellin/padic_zeta.hpp"

namespace mw {

using CFun = std::function<cplx(cplx)>;

enum class ZeroMethod { CompanionRoots, SignChange, WindingBisection };
std::string method_name(ZeroMethod m);

struct ZeroReport {
  cplx location;
  int multiplicity = 1;
  ZeroMethod method = ZeroMethod::WindingBisection;
  bool certified = false;
  double residual = 0;
  std::string cls;    // "local", "global", "rejected" once classified
  std::string place;  // "inf", "2", "3", ... for local zeros
};

// roots of sum c_i X^i via companion-matrix eigenvalues, Newton-polished
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

struct SignChangeScan {
  int count = 0;
  std::vector<double> phases;  // refined angles in [0, 2 pi)
};
// sign changes of Re(e^{-i N phi/2} P(e^{i phi}) / sqrt(u)) for self-inversive P, u = c_N / conj(c_0)
SignChangeScan sign_change_scan(const ExpPoly& P, int samples = 4096);
bool self_inversive(const ExpPoly& P, double tol = 1e-12);

// zeros in the fundamental strip 0 <= Im s < 2 pi / log q
std::vector<ZeroReport> exp_poly_roots(const LocalFactor& F);
// all zeros of the periodic family with Im s in [t0, t1]
std::vector<ZeroReport> exp_poly_roots_in(const LocalFactor& F, double t0, double t1);

struct Rect {
  double re0, re1, im0, im1;
};

// exclusion disks (radius 1e-3) consulted before scanning
struct WindingOptions {
  std::vector<cplx> poles;
  double boundary_rel_tol = 1e-9;  // min |f| on boundary relative to max |f|
  int initial_per_edge = 64;
  int max_depth = 40;
};
int winding_count(const CFun& f, const Rect& r, const WindingOptions& opt = {});
// sum over boxes of height <= h stacked from t0 to t1; inner edges move up when they hit a zero
int winding_count_tiled(const CFun& f, double re0, double re1, double t0, double t1, double h = 2.0,
                        const WindingOptions& opt = {});

struct LineScanOptions {
  double accept_rel = 1e-10;
  double cert_half = 1e-3;  // certification square half-side
  int threads = 0;          // 0: MW_THREADS or hardware
};
std::vector<ZeroReport> line_zeros(const CFun& f, double re, double t0, double t1, double step,
                                   const LineScanOptions& opt = {});

// refine a zero of f from s0 by complex Newton with a central-difference derivative
bool newton_refine(const CFun& f, cplx& s, int max_iter = 60);

int thread_budget();
void parallel_for(int n, const std::function<void(int)>& body, int threads = 0);

void sort_zeros(std::vector<ZeroReport>& z);

}  // namespace mw
