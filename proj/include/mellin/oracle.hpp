#pragma once

#include <climits>
#include <functional>
#include <vector>

#include "mellin/padic.hpp"

namespace mw {

struct PadicOracleParams {
  int j_min = INT_MIN;  // INT_MIN: derived from valuations
  int j_max = INT_MIN;
  int level_margin = 1;
  int vanish_guard = 2;
};

// Sum_j c_j q^{-js} with exact unit averages c_j, closed by the constant top tail
class PadicMellinOracle {
 public:
  PadicMellinOracle(const PAdicSDC& f, const UnitChar& chi, const PadicOracleParams& params = {});
  // Q_p^n: c_j = Theta(p^j) - p^{-n} Theta(p^{j+1}), Theta = prod theta_{f_i}
  PadicMellinOracle(const std::vector<PAdicSDC>& fs, const PadicOracleParams& params = {});

  cplx operator()(cplx s) const;
  int j_min() const { return jmin_; }
  int j_max() const { return jmax_; }
  const std::vector<cplx>& terms() const { return terms_; }
  cplx tail_constant() const { return tail_; }

 private:
  void check_guards(int guard);
  int p_ = 2;
  int jmin_ = 0, jmax_ = 0;
  std::vector<cplx> terms_;
  cplx tail_ = 1.0;
};

cplx oracle_padic_mellin(const PAdicSDC& f, const UnitChar& chi, cplx s, const PadicOracleParams& params = {});
cplx oracle_padic_vector(const std::vector<PAdicSDC>& fs, cplx s, const PadicOracleParams& params = {});

struct ArchOracleParams {
  std::vector<double> epsilon_schedule{2e-3, 1e-3, 5e-4, 2.5e-4};
  double cutoff_R = 0;  // 0: derived from the damping bound
  double abs_tol = 1e-8;
};

struct ArchOracleResult {
  cplx value;                  // polynomial extrapolation to eps = 0
  std::vector<cplx> per_eps;   // raw regularized integrals
};

// int e^{-2 pi i((a - i eps) x^2/2 + b x)} sgn(x)^odd |x|^{s-1} dx
ArchOracleResult oracle_real_mellin_full(double a, double b, cplx s, bool odd, const ArchOracleParams& params = {});
cplx oracle_real_mellin(double a, double b, cplx s, bool odd, const ArchOracleParams& params = {});

// over C with psi_C(w) = e^{-2 pi i (w + conj w)}, |z|^{2s} and c_n(z) = (z/|z|)^n
ArchOracleResult oracle_complex_hermitian_full(double a, cplx b, cplx s, int n, const ArchOracleParams& params = {});
cplx oracle_complex_hermitian(double a, cplx b, cplx s, int n, const ArchOracleParams& params = {});
// b != 0 (n = 0) is exact in one dimension, per_eps then holds a single entry
ArchOracleResult oracle_complex_square_full(cplx a, cplx b, cplx s, int n, const ArchOracleParams& params = {});
cplx oracle_complex_square(cplx a, cplx b, cplx s, int n, const ArchOracleParams& params = {});
// over R^n with ||x||^{s-n}
ArchOracleResult oracle_rn_radial_full(int n, double a, double bnorm, cplx s, const ArchOracleParams& params = {});
cplx oracle_rn_radial(int n, double a, double bnorm, cplx s, const ArchOracleParams& params = {});

// generic eps-Richardson driver; result(eps) per schedule entry
ArchOracleResult richardson(const std::vector<double>& schedule, const std::function<cplx(double)>& at_eps);

}  // namespace mw
