#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "mellin/specfun.hpp"
#include "mellin/types.hpp"

namespace mw {

using bigint = boost::multiprecision::cpp_int;

bool is_prime(long long n);
long long ipow(long long b, int e);

// numerator / p^pow with numerator coprime to p (or zero)
class PAdicRational {
 public:
  PAdicRational() = default;
  PAdicRational(int p, bigint numerator, int pow = 0);
  static PAdicRational from_int(int p, long long n) { return PAdicRational(p, bigint(n), 0); }
  static PAdicRational zero(int p) { return PAdicRational(p, bigint(0), 0); }
  // p^e
  static PAdicRational ppow(int p, int e);
  // parses "n", "n/d" with d a power of p, or "p^e"
  static PAdicRational parse(int p, const std::string& text);

  int p() const { return p_; }
  const bigint& numerator() const { return num_; }
  int pow() const { return pow_; }
  bool is_zero() const { return num_ == 0; }
  int valuation() const { return is_zero() ? INT_MAX : -pow_; }
  // |x|_p as double
  double abs() const;
  double to_double() const;
  std::string str() const;

  PAdicRational operator+(const PAdicRational& o) const;
  PAdicRational operator-(const PAdicRational& o) const;
  PAdicRational operator*(const PAdicRational& o) const;
  PAdicRational operator-() const { return PAdicRational(p_, -num_, pow_); }
  bool operator==(const PAdicRational& o) const {
    return p_ == o.p_ && num_ == o.num_ && pow_ == o.pow_;
  }
  // unit part u with x = u p^v (numerator), valid for nonzero x
  const bigint& unit_part() const { return num_; }

 private:
  void normalize();
  int p_ = 2;
  bigint num_ = 0;
  int pow_ = 0;
};

// lambda(x) in [0,1) with p-power denominator
PAdicRational frac_lambda(const PAdicRational& x);
cplx psi_p(const PAdicRational& x);

// psi_p of the rational num / den (den may carry a unit factor)
cplx psi_p_ratio(int p, const bigint& num, const bigint& den);

struct PAdicSDC {
  int p = 3;
  PAdicRational a;
  PAdicRational b;

  static PAdicSDC make(int p, const PAdicRational& a, const PAdicRational& b) { return {p, a, b}; }
  static PAdicSDC standard(int p) {
    return {p, PAdicRational::from_int(p, 1), PAdicRational::zero(p)};
  }
  // f(cx) with c = p^e
  PAdicSDC rescaled(int e) const;
  std::string str() const;
};

cplx sdc_eval(const PAdicSDC& f, const PAdicRational& x);

// Dirichlet character mod p^n, chi(g^j) = exp(2 pi i t j / phi(p^n))
struct DirichletCharData {
  int p = 3;
  int level = 1;
  long long generator = 2;
  long long index = 0;
  int conductor_level = 0;
  std::vector<long long> dlog;  // dlog[u mod p^n], -1 for non-units

  static DirichletCharData make(int p, int level, long long index);
  static long long primitive_root(int p);
  long long modulus() const { return ipow(p, level); }
  long long phi() const { return modulus() / p * (p - 1); }
  bool ramified() const { return conductor_level >= 1; }
  // value on an integer unit (value 0 off units)
  cplx operator()(long long u) const;
  cplx on_unit(const bigint& u) const;
  bool is_odd() const;
  // as a primitive Dirichlet character mod p^conductor_level
  DirichletCharacter primitive_character() const;
  std::string str() const;
};

// all characters mod p^n with index t in [0, phi)
std::vector<DirichletCharData> characters_mod(int p, int level);

using UnitChar = std::optional<DirichletCharData>;

// level m used by unit_average
int unit_average_level(const PAdicSDC& f, const PAdicRational& y, const UnitChar& chi);

// average over units u of f(u y) chi(u); exact up to the final exponentials
cplx unit_average(const PAdicSDC& f, const PAdicRational& y, const UnitChar& chi = std::nullopt,
                  int extra_level = 0);

// theta_f(y) = integral over Z_p of f(y x) dx, exact finite average
cplx theta_integral(const PAdicSDC& f, const PAdicRational& y, int extra_level = 0);

}  // namespace mw
