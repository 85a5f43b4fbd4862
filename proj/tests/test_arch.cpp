#include <doctest.h>

#include "mellin/arch_zeta.hpp"
#include "mellin/specfun.hpp"

using namespace mw;

TEST_CASE("real factor values") {
  CHECK(std::abs(zeta_real({1, 0}, 1.0) - expipi(-0.25)) < 1e-13);
  CHECK(zeta_real({1, 0}, {0.3, 2}, true) == cplx(0.0));
  for (cplx s : {cplx(0.2, 1), cplx(0.8, -3)}) CHECK(real_fe_residual({1, 1}, s) < 1e-9);
}

TEST_CASE("real weil index") {
  CHECK(std::abs(weil_index_real({1, 0}) - expipi(-0.25)) < 1e-15);
  CHECK(std::abs(weil_index_real({1, 1}) + expipi(-0.25)) < 1e-14);
  CHECK(std::abs(weil_index_real({-1, 0}) - expipi(0.25)) < 1e-15);
}

TEST_CASE("tate rho") {
  CHECK(std::abs(tate_rho_real(0.5) - 1.0) < 1e-14);
  CHECK(std::abs(std::abs(tate_rho_complex(0.5, 0)) - 1.0) < 1e-14);
  const cplx s(0.3, 0.4);
  const cplx expect = -std::pow(2 * kPi, 1.0 - 2.0 * s) * std::exp(log_gamma(s + 1.0) - log_gamma(2.0 - s));
  CHECK(std::abs(tate_rho_complex(s, 2) - expect) < 1e-12 * std::abs(expect));
}

TEST_CASE("hermitian factor") {
  CHECK(zeta_complex_hermitian({1, 0.0}, 0.7, 1) == cplx(0.0));
  CHECK(std::abs(zeta_complex_hermitian({1, 0.0}, 1.0, 0) - cplx(0, -1)) < 1e-14);
}

TEST_CASE("complex square factor") {
  CHECK(std::abs(zeta_complex_square({1.0, 0.0}, 2.0, 0)) < 1e-14);
  CHECK(zeta_complex_square({1.0, 0.0}, {0.5, 1}, 1) == cplx(0.0));
}

TEST_CASE("radial factor") {
  for (cplx s : {cplx(0.4, 1), cplx(1.3, -2)}) {
    const cplx a = zeta_rn_radial({1, 1.5, 0}, s), b = zeta_real({1.5, 0}, s);
    CHECK(std::abs(a - b) < 1e-13 * std::abs(b));
  }
  // n = 2, b = 0: pi Gamma(s/2) (pi i)^{-s/2}
  CHECK(std::abs(zeta_rn_radial({2, 1, 0}, 1.0) - kPi * expipi(-0.25)) < 1e-13);
}
