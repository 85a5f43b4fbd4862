#include <doctest.h>

#include "mellin/oracle.hpp"
#include "mellin/padic_zeta.hpp"
#include "mellin/zeros.hpp"

using namespace mw;

namespace {
PAdicSDC sdc(int p, const char* a, const char* b) {
  return PAdicSDC::make(p, PAdicRational::parse(p, a), PAdicRational::parse(p, b));
}
}  // namespace

TEST_CASE("standard odd factor") {
  const auto F = local_factor_unramified(PAdicSDC::standard(5));
  CHECK(F.kind == FactorKind::RationalInQs);
  CHECK(std::abs(F.eval(2.0) - 25.0 / 24.0) < 1e-15);
  CHECK(exp_poly_roots(F).empty());
}

TEST_CASE("rescaled a = 9 at p = 3") {
  const auto F = local_factor_unramified(sdc(3, "9", "0"));
  for (cplx s : {cplx(0.7, 1), cplx(2, -3)}) {
    const cplx expect = std::pow(3.0, s) / (1.0 - std::pow(3.0, -s));
    CHECK(std::abs(F.eval(s) - expect) < 1e-13 * std::abs(expect));
  }
  CHECK(exp_poly_roots(F).empty());
}

TEST_CASE("p = 3, b = 1/9 has k = 2") {
  const auto f = sdc(3, "1", "1/9");
  const auto F = local_factor_unramified(f);
  CHECK(F.prof.k == 2);
  const auto P = F.x_polynomial();
  CHECK(P.degree() == 4);
  for (cplx X : poly_roots(P.coeffs)) CHECK(std::abs(std::abs(X) - 1.0) < 1e-10);
  const PadicMellinOracle O(f, std::nullopt);
  for (cplx s : {cplx(0.3), cplx(0.7, 1), cplx(1.5, 5)}) CHECK(std::abs(F.eval(s) - O(s)) < 1e-12);
}

TEST_CASE("Q_2 special factor") {
  CHECK(std::abs(qp2_special(1.0) - 2.0 * expipi(0.25)) < 1e-14);
  // e^{i pi/4} y^2 - (1 + e^{i pi/4}) y + 2 = 0 with y = 2^s
  const cplx w = expipi(0.25);
  const cplx disc = std::sqrt((1.0 + w) * (1.0 + w) - 8.0 * w);
  for (cplx y : {((1.0 + w) + disc) / (2.0 * w), ((1.0 + w) - disc) / (2.0 * w)}) {
    CHECK(std::abs(std::abs(y) - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(qp2_special(std::log(y) / std::log(2.0))) < 1e-12);
  }
  const PadicMellinOracle O(PAdicSDC::standard(2), std::nullopt);
  CHECK(std::abs(O({1.5, 2}) - qp2_special({1.5, 2})) < 1e-12);
  const auto zs = exp_poly_roots(local_factor_unramified(PAdicSDC::standard(2)));
  CHECK(zs.size() == 2);
  for (const auto& z : zs) CHECK(std::abs(std::exp(z.location * std::log(2.0))) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("ramified: odd character with even f vanishes") {
  const auto chi = DirichletCharData::make(3, 1, 1);
  const auto F = local_factor_ramified(sdc(3, "1/3", "0"), chi);
  CHECK(F.kind == FactorKind::Vanishes);
  CHECK(F.eval({0.4, 2}) == cplx(0.0));
}

TEST_CASE("ramified: order four character mod 5") {
  const auto chi = DirichletCharData::make(5, 1, 1);
  CHECK(std::abs(std::abs(rho0_gauss_sum(chi)) - 1.0) < 1e-12);
  const auto f = sdc(5, "1/5", "1/5");
  const auto F = local_factor_ramified(f, chi);
  REQUIRE(F.kind != FactorKind::Vanishes);
  const PadicMellinOracle O(f, chi);
  for (double re : {0.3, 0.7, 1.5})
    for (double im : {0.0, 1.0, 5.0}) CHECK(std::abs(F.eval({re, im}) - O({re, im})) < 1e-10);
  for (const auto& z : exp_poly_roots(F)) CHECK(std::abs(z.location.real() - 0.5) < 1e-10);
}

TEST_CASE("weil index") {
  CHECK(std::abs(weil_index_padic(PAdicSDC::standard(7)) - 1.0) < 1e-14);
  CHECK(std::abs(weil_index_padic(PAdicSDC::standard(2)) - expipi(0.25)) < 1e-14);
  // gamma(psi(x^2/2 + b x)) = gamma(psi(x^2/2)) psi(-b^2/2)
  for (auto [p, m, k] : {std::tuple{3, 1, 1}, std::tuple{3, 2, 2}, std::tuple{5, 3, 1}, std::tuple{7, 1, 2}}) {
    const auto b = PAdicRational(p, bigint(m), k);
    const auto f = PAdicSDC::make(p, PAdicRational::from_int(p, 1), b);
    const cplx expect = weil_index_padic(PAdicSDC::standard(p)) * psi_p_ratio(p, bigint(-m * m), bigint(2 * ipow(p, 2 * k)));
    CHECK(std::abs(weil_index_padic(f) - expect) < 1e-10);
  }
}

TEST_CASE("vector factors") {
  const auto f0 = PAdicSDC::standard(3), f1 = sdc(3, "1", "1/3");
  const auto flat = padic_vector_factor({f0, f0});
  CHECK(exp_poly_roots(flat).empty());
  // proportional to 1/(1 - 3^{-s}) and so to 1/(1 - 3^{-s}) up to a constant
  const cplx r1 = flat.eval(0.7) * (1.0 - std::pow(3.0, -0.7)), r2 = flat.eval({1.3, 2}) * (1.0 - std::pow(3.0, cplx(-1.3, -2)));
  CHECK(std::abs(r1 - r2) < 1e-12);
  const auto mixed = padic_vector_factor({f1, f0});
  const auto zs = exp_poly_roots(mixed);
  CHECK(!zs.empty());
  for (const auto& z : zs) CHECK(std::abs(z.location.real() - 1.0) < 1e-10);
  for (cplx s : {cplx(0.7, 1), cplx(1.5, -2)}) CHECK(std::abs(mixed.eval(s) - oracle_padic_vector({f1, f0}, s)) < 1e-10);
}
