#pragma once

#include <map>
#include <string>
#include <vector>

#include "mellin/arch_zeta.hpp"
#include "mellin/padic_zeta.hpp"
#include "mellin/specfun.hpp"
#include "mellin/zeros.hpp"

namespace mw {

// f = f_inf x prod_{p in S} f_p x prod_{p not in S} psi_p(x^2/2); chi primitive
struct GlobalSpec {
  RealSDC f_inf;
  std::map<int, PAdicSDC> finite;  // always holds p = 2
  DirichletCharacter chi;

  // f = psi(x^2/2) at infinity and 2, trivial chi
  static GlobalSpec reference();
  std::string str() const;
};

struct PlaceFactor {
  int p = 0;              // 0 for infinity
  bool ramified = false;  // p in T
  LocalFactor local;      // finite places
  UnitChar unit_char;     // chi_p on units for ramified p
  cplx twist = 1.0;       // omega_p(p)
  std::string name() const { return p ? std::to_string(p) : std::string("inf"); }
};

struct GlobalFactorization {
  RealSDC f_inf;
  bool odd_inf = false;
  std::vector<PlaceFactor> places;   // finite places of S, ascending
  std::vector<int> correction_primes; // S \ T
  DirichletCharacter chi;

  cplx place_value(const PlaceFactor& v, cplx s) const;
  cplx arch_value(cplx s) const;
  // L-mode: all s away from poles
  cplx eval(cplx s) const;
  // direct Euler product over primes <= P (Re s > 1); tail_rel bounds the relative truncation error
  cplx eval_direct(cplx s, long long P, double* tail_rel = nullptr) const;
};

GlobalFactorization factorize(const GlobalSpec& spec);

// product of characters mod p_i^{e_i} over distinct primes, as a character mod prod p_i^{e_i}
DirichletCharacter character_product(const std::vector<DirichletCharData>& parts);

cplx xi_f_reference(cplx s);
cplx assemble_xi_f(const GlobalSpec& spec, cplx s);

cplx weil_index_global(const GlobalSpec& spec);
double idele_modulus(const GlobalSpec& spec);
// omega(a) for the idele class character attached to chi
cplx omega_of_a(const GlobalSpec& spec);

double global_fe_residual(const GlobalSpec& spec, cplx s);

// sets z.cls to "local", "global" or "rejected" and z.place for local zeros
void classify_zero(ZeroReport& z, const GlobalSpec& spec);

struct GlobalZeroScan {
  std::vector<ZeroReport> zeros;  // classified
  int winding_total = 0;          // zeros of Xi_f counted in the scanned rectangle
  bool complete = false;          // winding_total == zeros.size()
};
// zeros on Re s = center located by line scan, box winding over [re0, re1] x [t0, t1]
GlobalZeroScan scan_global_zeros(const GlobalSpec& spec, double re0, double re1, double t0, double t1,
                                 double step = 0.05, const LineScanOptions& opt = {});

}  // namespace mw
