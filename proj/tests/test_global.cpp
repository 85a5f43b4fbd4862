#include <doctest.h>

#include "mellin/global_zeta.hpp"

using namespace mw;

namespace {
PAdicSDC sdc(int p, const char* a, const char* b) {
  return PAdicSDC::make(p, PAdicRational::parse(p, a), PAdicRational::parse(p, b));
}
}  // namespace

TEST_CASE("reference assembly agrees with the closed form") {
  const auto R = GlobalSpec::reference();
  for (cplx s : {cplx(2), cplx(0.3, 5), cplx(0.5, 14), cplx(-0.5, 3)})
    CHECK(std::abs(assemble_xi_f(R, s) - xi_f_reference(s)) <= 1e-10 * std::abs(xi_f_reference(s)));
}

TEST_CASE("Euler product at s = 2") {
  const auto G = factorize(GlobalSpec::reference());
  double tail = 0;
  const cplx direct = G.eval_direct(2.0, 100000, &tail);
  const cplx ref = xi_f_reference(2.0);
  CHECK(tail < 1e-4);
  CHECK(std::abs(direct - ref) <= (tail + 1e-8) * std::abs(ref));
}

TEST_CASE("global functional equation") {
  const auto R = GlobalSpec::reference();
  CHECK(global_fe_residual(R, {0.3, 5}) < 1e-9);
  CHECK(global_fe_residual(R, 0.5) < 1e-10);
  for (cplx s : {cplx(0.2, 3), cplx(0.8, -7)}) {
    const cplx a = assemble_xi_f(R, s), b = std::conj(assemble_xi_f(R, 1.0 - std::conj(s)));
    CHECK(std::abs(a - b) <= 1e-9 * std::abs(a));
  }
  auto R4 = R;
  R4.finite[2] = sdc(2, "4", "0");
  CHECK(global_fe_residual(R4, {0.3, 5}) < 1e-9);
}

TEST_CASE("twisted specs satisfy the functional equation") {
  GlobalSpec g;
  g.f_inf = {1, 0.5};
  g.finite[2] = PAdicSDC::standard(2);
  g.finite[3] = sdc(3, "1", "1/3");
  g.finite[5] = sdc(5, "1/5", "1/5");
  for (auto parts : {std::vector{DirichletCharData::make(5, 1, 1)}, std::vector{DirichletCharData::make(3, 1, 1)},
                     std::vector{DirichletCharData::make(7, 1, 2)}}) {
    g.chi = character_product(parts);
    for (cplx s : {cplx(0.3, 5), cplx(0.6, -2)}) CHECK(global_fe_residual(g, s) < 1e-9);
  }
}

TEST_CASE("odd character with an even archimedean factor vanishes") {
  GlobalSpec g;
  g.f_inf = {1, 0};
  g.finite[2] = PAdicSDC::standard(2);
  g.finite[3] = sdc(3, "1", "1/3");
  g.chi = character_product({DirichletCharData::make(3, 1, 1)});
  REQUIRE(g.chi.parity() == 1);
  const auto G = factorize(g);
  CHECK(std::abs(G.place_value(G.places.back(), {0.4, 2})) > 0);
  for (cplx s : {cplx(0.4, 2), cplx(2, 1)}) CHECK(G.eval(s) == cplx(0.0));
}

TEST_CASE("classification") {
  const auto R = GlobalSpec::reference();
  ZeroReport z;
  z.certified = true;
  z.location = {0.5, 14.134725141734693};
  classify_zero(z, R);
  CHECK(z.cls == "global");
  const auto two = exp_poly_roots(local_factor_unramified(PAdicSDC::standard(2)));
  z.location = two.front().location;
  classify_zero(z, R);
  CHECK(z.cls == "local");
  CHECK(z.place == "2");

  auto R3 = R;
  R3.finite[3] = PAdicSDC::standard(3);
  z.location = {0, 2 * kPi / std::log(3.0)};
  classify_zero(z, R3);
  CHECK(z.cls == "rejected");

  z.certified = false;
  CHECK_THROWS_AS(classify_zero(z, R), UncertifiedError);
}

TEST_CASE("psi_3(x^2/18) is a rescaled standard character") {
  const auto F = local_factor_unramified(sdc(3, "1/9", "0"));
  CHECK(F.prof.k == 0);
  CHECK(exp_poly_roots(F).empty());
}

TEST_CASE("spec with k = 1 at p = 3") {
  GlobalSpec g = GlobalSpec::reference();
  g.finite[3] = sdc(3, "1", "1/3");
  REQUIRE(local_factor_unramified(g.finite[3]).prof.k == 1);
  const auto scan = scan_global_zeros(g, -0.1, 1.1, 1, 20);
  CHECK(scan.complete);
  const auto three = exp_poly_roots_in(local_factor_unramified(g.finite[3]), 1, 20);
  const auto two = exp_poly_roots_in(local_factor_unramified(PAdicSDC::standard(2)), 1, 20);
  REQUIRE(!three.empty());
  int n2 = 0, n3 = 0, nglobal = 0;
  for (const auto& z : scan.zeros) {
    CHECK(std::abs(z.location.real() - 0.5) < 1e-6);
    if (z.cls == "global") ++nglobal;
    if (z.cls == "local" && z.place == "2") ++n2;
    if (z.cls == "local" && z.place == "3") ++n3;
  }
  CHECK(nglobal == 1);  // 14.13 only below height 20
  CHECK(n2 == int(two.size()));
  CHECK(n3 == int(three.size()));
}

TEST_CASE("configuration errors") {
  GlobalSpec g = GlobalSpec::reference();
  g.chi = character_product({DirichletCharData::make(3, 2, 3)});  // induced, not primitive
  CHECK_THROWS_AS(factorize(g), DomainError);
  g = GlobalSpec::reference();
  g.f_inf.a = 0;
  CHECK_THROWS_AS(factorize(g), DegenerateError);
}
