#include <doctest.h>

#include "mellin/specfun.hpp"

using namespace mw;

TEST_CASE("log_gamma values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(kPi))) < 1e-14);
  const cplx z(3, 4);
  // Gamma(z + 1) = z Gamma(z)
  CHECK(std::abs(std::exp(log_gamma(z + 1.0) - log_gamma(z)) - z) < 1e-12 * std::abs(z));
  CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-12);
}

TEST_CASE("gamma_ratio at poles of the denominator") {
  CHECK(gamma_ratio(0.5, -2.0) == cplx(0.0));
  CHECK(std::abs(gamma_ratio(3.0, 2.0) - 2.0) < 1e-14);
}

TEST_CASE("hyp1f1 trivial cases") {
  CHECK(std::abs(hyp1f1_value({0.3, 0.7}, 0.5, 0.0) - 1.0) < 1e-15);
  const cplx z(1.2, -2.5);
  CHECK(std::abs(hyp1f1_value(1.5, 1.5, z) - std::exp(z)) < 1e-13 * std::abs(std::exp(z)));
}

TEST_CASE("hyp1f1 Kummer transformation") {
  const cplx u(0.3, 0.7), z(0, 2);
  const double v = 0.5;
  const cplx lhs = std::exp(z) * hyp1f1_value(u, v, -z), rhs = hyp1f1_value(v - u, v, z);
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
}

TEST_CASE("hyp1f1 keeps precision under heavy cancellation") {
  const cplx u(0.44, 9.55), z(0, 37.9);
  const auto q = hyp1f1(u, 0.5, z);
  CHECK(q.cancellation_ratio > 1e15);
  const cplx other = std::exp(z) * hyp1f1_value(0.5 - u, 0.5, -z);
  CHECK(std::abs(q.value - other) <= 1e-9 * std::abs(q.value));
}

TEST_CASE("hyp1f1 argument cap") { CHECK_THROWS_AS(hyp1f1(0.5, 0.5, {0, 41}), DomainError); }

TEST_CASE("riemann zeta values") {
  CHECK(std::abs(riemann_zeta(2.0) - kPi * kPi / 6) < 1e-13);
  CHECK(std::abs(riemann_zeta(-1.0) + 1.0 / 12) < 1e-13);
  CHECK(std::abs(riemann_zeta({0.5, 14.134725141734693})) < 1e-6);
  CHECK_THROWS_AS(riemann_zeta(1.0), PoleError);
  // direct series
  double s = 0;
  for (int n = 1000000; n >= 1; --n) s += 1.0 / (double(n) * n * n);
  CHECK(std::abs(riemann_zeta(3.0) - s) < 1e-11);
}

TEST_CASE("dirichlet L values") {
  CHECK(std::abs(dirichlet_l(2.0, DirichletCharacter::trivial()) - kPi * kPi / 6) < 1e-13);
  DirichletCharacter chi4;
  chi4.modulus = 4;
  chi4.values = {0.0, 1.0, 0.0, -1.0};
  CHECK(std::abs(dirichlet_l(1.0, chi4) - kPi / 4) < 1e-12);
  CHECK(chi4.is_primitive());
  CHECK(chi4.parity() == 1);

  DirichletCharacter chi5;  // order 4, chi(2) = i
  chi5.modulus = 5;
  chi5.values = {0.0, 1.0, cplx(0, 1), cplx(0, -1), -1.0};
  CHECK(std::abs(dirichlet_l(3.0, chi5) - dirichlet_l_euler(3.0, chi5, 100000)) < 1e-8);
}

TEST_CASE("completed xi") {
  CHECK(std::abs(completed_xi(0.5).imag()) < 1e-12);
  const cplx a = completed_xi({0.3, 2}), b = completed_xi({0.7, -2});
  CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
  CHECK(std::abs(completed_xi(2.0) - kPi / 6) < 1e-13);
}

TEST_CASE("primes") {
  const auto p = primes_upto(30);
  CHECK(p.size() == 10);
  CHECK(p.back() == 29);
}
