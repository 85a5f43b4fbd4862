#include <doctest.h>

#include "mellin/arch_zeta.hpp"
#include "mellin/padic_zeta.hpp"
#include "mellin/specfun.hpp"
#include "mellin/zeros.hpp"

using namespace mw;

TEST_CASE("polynomial roots") {
  // (X - 1)(X - 2)(X + i)
  const std::vector<cplx> c{cplx(0, 2), cplx(2, -3), cplx(-3, 1), 1.0};
  auto r = poly_roots(c);
  REQUIRE(r.size() == 3);
  for (cplx x : {cplx(1), cplx(2), cplx(0, -1)}) {
    double best = 1;
    for (cplx y : r) best = std::min(best, std::abs(x - y));
    CHECK(best < 1e-13);
  }
}

TEST_CASE("k = 1 quadratic at q = 3") {
  const auto F = local_factor_unramified(PAdicSDC::make(3, PAdicRational::from_int(3, 1), PAdicRational::ppow(3, -1)));
  const auto P = F.x_polynomial();
  REQUIRE(P.degree() == 2);
  CHECK(self_inversive(P));
  for (cplx X : poly_roots(P.coeffs)) CHECK(std::abs(std::abs(X) - 1.0) < 1e-10);
  CHECK(sign_change_scan(P).count == 2);
  for (const auto& z : exp_poly_roots(F)) {
    CHECK(z.certified);
    CHECK(std::abs(F.eval(z.location)) < 1e-10);
  }
}

TEST_CASE("winding counts") {
  CHECK(winding_count([](cplx s) { return s - cplx(0.5, 3); }, {0, 1, 2, 4}) == 1);
  CHECK(winding_count([](cplx s) { return completed_xi(s); }, {-0.1, 1.1, 10, 20}) == 1);
  CHECK_THROWS_AS(winding_count([](cplx s) { return s - cplx(0.5, 2); }, {0, 1, 2, 4}), BoundaryZeroError);
}

TEST_CASE("line zeros on a synthetic function") {
  CFun f = [](cplx s) { return std::sinh(kPi * (s - 0.5)); };
  const auto zs = line_zeros(f, 0.5, 0.5, 5.5, 0.05);
  REQUIRE(zs.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(std::abs(zs[k].location - cplx(0.5, k + 1)) < 1e-10);
}

TEST_CASE("Q_2 factor has two zeros per period") {
  const auto zs = line_zeros([](cplx s) { return qp2_special(s); }, 0.5, 0, 2 * kPi / std::log(2.0), 0.05);
  CHECK(zs.size() == 2);
  const auto F = local_factor_unramified(PAdicSDC::standard(2));
  // base roots near 0.672 and 7.259, period 2 pi / log 2
  CHECK(exp_poly_roots_in(F, 0, 30).size() == 7);
}

TEST_CASE("real factor zeros lie on the line") {
  CFun g = [](cplx s) { return zeta_real({1, 1}, s); };
  const auto zs = line_zeros(g, 0.5, 0, 12, 0.05);
  REQUIRE(!zs.empty());
  for (const auto& z : zs) {
    CHECK(z.certified);
    CHECK(std::abs(z.location.real() - 0.5) < 1e-8);
    CHECK(std::abs(g(z.location)) < 1e-8);
  }
  const double T1 = zs.front().location.imag();
  const auto first = line_zeros(g, 0.5, 0.5, T1 + 1, 0.05);
  CHECK(winding_count(g, {0.1, 0.9, 0.5, T1 + 1}) == int(first.size()));
  CHECK(winding_count_tiled(g, 0.1, 0.9, 0, 12) == int(zs.size()));
}

TEST_CASE("zero reports sort by height") {
  std::vector<ZeroReport> z(3);
  z[0].location = {0.5, 3};
  z[1].location = {0.4, 1};
  z[2].location = {0.3, 3};
  sort_zeros(z);
  CHECK(z[0].location.imag() == 1);
  CHECK(z[1].location.real() == 0.3);
}
