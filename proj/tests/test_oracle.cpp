#include <doctest.h>

#include "mellin/arch_zeta.hpp"
#include "mellin/oracle.hpp"
#include "mellin/padic_zeta.hpp"

using namespace mw;

TEST_CASE("p-adic oracle") {
  CHECK(std::abs(oracle_padic_mellin(PAdicSDC::standard(7), std::nullopt, 1.3) - 1.0 / (1.0 - std::pow(7.0, -1.3))) < 1e-12);
  CHECK(std::abs(oracle_padic_mellin(PAdicSDC::standard(2), std::nullopt, {0.8, 1}) - qp2_special({0.8, 1})) < 1e-12);
}

TEST_CASE("unit average table for Q_2") {
  const auto f = PAdicSDC::standard(2);
  const cplx expect[5] = {0.0, expipi(0.25), -1.0, 1.0, 1.0};  // y = 2^j, j = -2..2
  for (int j = -2; j <= 2; ++j) CHECK(std::abs(unit_average(f, PAdicRational::ppow(2, j)) - expect[j + 2]) < 1e-14);
}

TEST_CASE("real oracle") {
  CHECK(std::abs(oracle_real_mellin(1, 0, 1.0, false) - expipi(-0.25)) < 1e-6);
  CHECK(std::abs(oracle_real_mellin(1, 1, 0.7, false) - zeta_real({1, 1}, 0.7)) < 1e-6);
  CHECK(std::abs(oracle_real_mellin(1, 0, 0.7, true)) < 1e-8);
  ArchOracleParams bad;
  bad.epsilon_schedule = {1e-3, 2e-3};
  CHECK_THROWS_AS(oracle_real_mellin(1, 1, 0.7, false, bad), DomainError);
}

TEST_CASE("complex and radial oracles") {
  CHECK(std::abs(oracle_complex_hermitian(1, 0.0, 0.7, 1)) < 1e-7);
  CHECK(std::abs(oracle_complex_hermitian(1, 0.0, 1.0, 0) - cplx(0, -1)) < 1e-5);
  const cplx sq = zeta_complex_square({1.0, 0.3}, {0.6, 1}, 0);
  CHECK(std::abs(oracle_complex_square(1.0, 0.3, {0.6, 1}, 0) - sq) < 1e-6 * std::abs(sq));
  CHECK(std::abs(oracle_rn_radial(2, 1, 0, 1.0) - kPi * expipi(-0.25)) < 1e-5);
  const cplx r3 = zeta_rn_radial({3, 1, 1}, {1.2, 0.7});
  CHECK(std::abs(oracle_rn_radial(3, 1, 1, {1.2, 0.7}) - r3) < 1e-6 * std::abs(r3));
}

TEST_CASE("epsilon extrapolation") {
  // f(eps) = 1 + eps + eps^2
  const auto r = richardson({2e-3, 1e-3, 5e-4}, [](double e) { return cplx(1 + e + e * e); });
  CHECK(std::abs(r.value - 1.0) < 1e-14);
  CHECK(r.per_eps.size() == 3);
}
