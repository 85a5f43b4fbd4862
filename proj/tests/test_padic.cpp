#include <doctest.h>

#include "mellin/padic.hpp"
#include "mellin/padic_zeta.hpp"

using namespace mw;

namespace {
PAdicRational R(int p, const char* t) { return PAdicRational::parse(p, t); }
}

TEST_CASE("valuations and parsing") {
  CHECK(R(3, "7/9").valuation() == -2);
  CHECK(R(3, "18").valuation() == 2);
  CHECK(R(5, "5^-3") == PAdicRational::ppow(5, -3));
  CHECK(R(2, "3/8").abs() == doctest::Approx(8.0));
  CHECK_THROWS_AS(R(3, "1/6"), DomainError);
  CHECK((R(3, "1/9") * R(3, "9")) == R(3, "1"));
  CHECK((R(3, "1/3") + R(3, "2/3")) == R(3, "1"));
}

TEST_CASE("fractional part") {
  CHECK(frac_lambda(R(3, "12")).is_zero());
  CHECK(frac_lambda(R(3, "7/9")) == R(3, "7/9"));
  CHECK(frac_lambda(R(5, "26/25")) == R(5, "1/25"));
  CHECK(frac_lambda(R(5, "-1/5")) == R(5, "4/5"));
}

TEST_CASE("additive character") {
  CHECK(std::abs(psi_p(R(7, "49")) - 1.0) < 1e-15);
  CHECK(std::abs(psi_p(R(2, "1/2")) + 1.0) < 1e-15);
  CHECK(std::abs(psi_p(R(2, "1/8")) - expipi(0.25)) < 1e-15);
}

TEST_CASE("second degree character values") {
  const auto f3 = PAdicSDC::standard(3);
  CHECK(std::abs(sdc_eval(f3, PAdicRational::zero(3)) - 1.0) < 1e-15);
  CHECK(std::abs(sdc_eval(f3, R(3, "5")) - 1.0) < 1e-15);
  CHECK(std::abs(sdc_eval(PAdicSDC::standard(2), R(2, "1")) + 1.0) < 1e-15);
}

TEST_CASE("unit averages") {
  const auto f3 = PAdicSDC::standard(3), f2 = PAdicSDC::standard(2);
  CHECK(std::abs(unit_average(f3, R(3, "1")) - 1.0) < 1e-14);
  CHECK(std::abs(unit_average(f3, R(3, "3")) - 1.0) < 1e-14);
  CHECK(std::abs(unit_average(f3, R(3, "1/3"))) < 1e-14);
  CHECK(std::abs(unit_average(f2, R(2, "1/2")) - expipi(0.25)) < 1e-14);
}

TEST_CASE("characters mod p^n") {
  const auto cs = characters_mod(5, 1);
  CHECK(cs.size() == 4);
  int ramified = 0;
  for (const auto& c : cs) ramified += c.ramified();
  CHECK(ramified == 3);
  const auto quad = DirichletCharData::make(3, 1, 1);
  CHECK(quad.is_odd());
  CHECK(std::abs(quad(2) + 1.0) < 1e-15);
  CHECK(std::abs(quad(3)) == 0.0);
  const auto chi9 = DirichletCharData::make(3, 2, 3);  // induced from mod 3
  CHECK(chi9.conductor_level == 1);
}

TEST_CASE("gauss sums have modulus one") {
  for (int p : {3, 5, 7, 11})
    for (int n : {1, 2})
      for (const auto& c : characters_mod(p, n))
        if (c.ramified() && c.conductor_level == n) CHECK(std::abs(std::abs(rho0_gauss_sum(c)) - 1.0) < 1e-12);
  CHECK(std::abs(rho0_gauss_sum(DirichletCharData::make(3, 1, 1)) - cplx(0, 1)) < 1e-12);
}

TEST_CASE("fourier transform of chi on the units") {
  // phi^(x) = int_{Z_p^x} chi(y) psi(-x y) dy = chi(-1) rho0 p^{-n/2} chibar(p^n x) 1_{Z_p^x}(p^n x)
  const int p = 5, n = 1, M = 3;
  const auto chi = DirichletCharData::make(p, n, 1);
  const cplx rho = rho0_gauss_sum(chi);
  const long long pM = ipow(p, M);
  for (long long v : {1, 2, 3, 4, 7, 5, 10, 13}) {
    for (int j : {-1, 0}) {
      // x = v p^{j - n}
      cplx sum = 0;
      for (long long u = 1; u < pM; ++u) {
        if (u % p == 0) continue;
        const PAdicRational x = PAdicRational(p, bigint(-u * v), n - j);
        sum += chi(u) * psi_p(x);
      }
      sum /= double(pM);
      // p^n x = v p^j
      long long w = v;
      if (j == -1) w = (v % p == 0) ? v / p : 0;
      cplx expect = 0;
      if (w % p != 0) expect = chi(-1) * rho * std::pow(double(p), -n / 2.0) * std::conj(chi(w));
      CHECK(std::abs(sum - expect) < 1e-12);
    }
  }
}
