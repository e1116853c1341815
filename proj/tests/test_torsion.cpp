// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/torsion.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

using namespace padicert;

namespace {

template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

PadicNumber eval_int_poly_qp(const std::vector<mpz_class>& g,
                             const PadicNumber& x) {
  PadicNumber acc =
      PadicNumber::from_integer(g.back(), x.prime(), x.precision());
  for (size_t i = g.size() - 1; i-- > 0;)
    acc = acc * x + PadicNumber::from_integer(g[i], x.prime(), x.precision());
  return acc;
}

}  // namespace

TEST_CASE("division polynomial seeds") {
  APoly A = {3}, B = {1};
  auto p1 = division_polynomial(1, A, B);
  CHECK(p1.f == XPoly{{1}});
  CHECK_FALSE(p1.has_y);

  auto p2 = division_polynomial(2, A, B);
  CHECK(p2.f == XPoly{{2}});
  CHECK(p2.has_y);

  auto p3 = division_polynomial(3, A, B);
  CHECK(p3.f == XPoly{{-9}, {12}, {18}, {}, {3}});
  CHECK_FALSE(p3.has_y);

  auto p4 = division_polynomial(4, A, B);
  CHECK(p4.f == XPoly{{-140}, {-48}, {-180}, {80}, {60}, {}, {4}});
  CHECK(p4.has_y);

  CHECK(code_of([] { division_polynomial(0, {}, {}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("psi_7 factors as the sextic times the degree-18 part") {
  auto psi7 = division_polynomial(7, {}, {0, 1});
  CHECK_FALSE(psi7.has_y);

  XPoly sextic(7);
  sextic[0] = {0, 0, 16};
  sextic[3] = {0, -4};
  sextic[6] = {7};
  XPoly deg18(19);
  deg18[0] = {0, 0, 0, 0, 0, 0, 4096};
  deg18[3] = {0, 0, 0, 0, 0, -49152};
  deg18[6] = {0, 0, 0, 0, -189696};
  deg18[9] = {0, 0, 0, -123136};
  deg18[12] = {0, 0, -5808};
  deg18[15] = {0, 564};
  deg18[18] = {1};

  CHECK(psi7.f == xpoly_mul(sextic, deg18));

  // substitution at a = -2 sends the sextic to 7x^6 + 8x^3 + 64
  CHECK(substitute_parameter(sextic, -2) ==
        std::vector<mpz_class>{64, 0, 0, 8, 0, 0, 7});
}

TEST_CASE("theta branches of the 7-torsion") {
  auto [theta, theta2] = seventh_torsion_theta(-2, kDefaultPrecision);
  CHECK(theta.valuation() == 0);
  CHECK(theta.residue() == 6);
  CHECK(theta2.valuation() == -1);

  // z^2 - (4a/7) z + 16a^2/7 has the two branches as roots
  PadicNumber sum = PadicNumber::from_rational(4 * -2, 7, 7, 20);
  PadicNumber prod = PadicNumber::from_rational(16 * 4, 7, 7, 20);
  CHECK((theta + theta2 - sum).is_zero());
  CHECK((theta * theta2 - prod).is_zero());

  CHECK(code_of([] { seventh_torsion_theta(1, 20); }) ==
        ErrorCode::WrongResidueClass);
  CHECK(code_of([] { torsion7_qp(-3); }) == ErrorCode::WrongResidueClass);
}

TEST_CASE("the 7-torsion of y^2 = x^3 - 2 over Q_7") {
  auto pts = torsion7_qp(-2);
  REQUIRE(pts.size() == 7);
  CHECK(pts[0].inf);

  PadicNumber A0 = PadicNumber::zero(7, kDefaultPrecision);
  PadicNumber B = PadicNumber::from_integer(-2, 7, kDefaultPrecision);
  std::vector<long> xres = {3, 3, 5, 5, 6, 6};
  std::vector<long> yres = {2, 5, 2, 5, 2, 5};
  for (size_t i = 1; i < pts.size(); ++i) {
    CHECK(pts[i].x.residue() == xres[i - 1]);
    CHECK(pts[i].y.residue() == yres[i - 1]);
    CHECK(on_curve(pts[i], A0, B));
    CHECK(ec_scalar_mul(mpz_class(7), pts[i], A0).inf);
    CHECK_FALSE(ec_scalar_mul(mpz_class(2), pts[i], A0).inf);
    CHECK_FALSE(ec_scalar_mul(mpz_class(3), pts[i], A0).inf);
  }

  // psi_7 vanishes on every constructed x-coordinate
  auto psi7 = substitute_parameter(division_polynomial(7, {}, {0, 1}).f, -2);
  for (size_t i = 1; i < pts.size(); ++i)
    CHECK(eval_int_poly_qp(psi7, pts[i].x).is_zero());

  // reductions enumerate the affine points of y^2 = x^3 + 5 over F_7
  std::set<std::pair<long, long>> reduced;
  for (size_t i = 1; i < pts.size(); ++i) {
    auto R = reduce_point(pts[i]);
    REQUIRE_FALSE(R.inf);
    reduced.insert({R.x.index(), R.y.index()});
  }
  CHECK(reduced.size() == 6);
  FqFieldPtr F = FqField::get(7, 1);
  std::set<std::pair<long, long>> affine;
  for (long x = 0; x < 7; ++x)
    for (long y = 0; y < 7; ++y)
      if ((y * y - (x * x * x + 5)) % 7 == 0) affine.insert({x, y});
  CHECK(reduced == affine);

  // another family member
  auto pts5 = torsion7_qp(5, 20);
  CHECK(pts5.size() == 7);
  CHECK(pts5[1].x.residue() == 3);
}

TEST_CASE("etale lift over Q_7 matches the explicit construction") {
  auto k = LocalField::unramified(7, 1, kDefaultPrecision);
  auto P0 = etale_torsion_lift(0, -2, k);
  REQUIRE_FALSE(P0.inf);

  auto st = p_primary_generator(0, 5, FqField::get(7, 1), 7);
  REQUIRE(st.N0 == 1);
  auto red = reduce_point(P0);
  REQUIRE_FALSE(red.inf);
  CHECK(red.x == st.generator.x);
  CHECK(red.y == st.generator.y);

  LocalFieldElement A0 = LocalFieldElement::zero(k);
  CHECK(ec_scalar_mul(mpz_class(7), P0, A0).inf);
  CHECK_FALSE(ec_scalar_mul(mpz_class(3), P0, A0).inf);

  bool matched = false;
  for (const auto& T : torsion7_qp(-2)) {
    if (T.inf) continue;
    if (T.x.residue() == st.generator.x.coeff(0) &&
        T.y.residue() == st.generator.y.coeff(0)) {
      CHECK((P0.x.coeff(0) - T.x).is_zero());
      CHECK((P0.y.coeff(0) - T.y).is_zero());
      matched = true;
    }
  }
  CHECK(matched);
}

TEST_CASE("etale lift over an unramified quadratic base") {
  auto k = LocalField::unramified(5, 2, 20);
  auto P0 = etale_torsion_lift(3, 0, k);
  REQUIRE_FALSE(P0.inf);

  LocalFieldElement A3 = LocalFieldElement::from_integer(k, 3);
  LocalFieldElement B0 = LocalFieldElement::zero(k);
  CHECK(on_curve(P0, A3, B0));
  CHECK(ec_scalar_mul(mpz_class(5), P0, A3).inf);
  CHECK_FALSE(ec_scalar_mul(mpz_class(2), P0, A3).inf);

  auto st = p_primary_generator(3, 0, FqField::get(5, 2), 5);
  REQUIRE(st.N0 == 1);
  auto red = reduce_point(P0);
  REQUIRE_FALSE(red.inf);
  CHECK(red.x == st.generator.x);
  CHECK(red.y == st.generator.y);
}

TEST_CASE("etale lift edge cases") {
  // trivial p-primary part: the lift is O
  auto k7 = LocalField::unramified(7, 1, 16);
  CHECK(etale_torsion_lift(0, 1, k7).inf);

  // supersingular reduction is refused upstream
  auto k5 = LocalField::unramified(5, 1, 16);
  CHECK(code_of([&] { etale_torsion_lift(0, 1, k5); }) ==
        ErrorCode::NotOrdinary);

  auto L = LocalField::cyclotomic(7, 16);
  CHECK(code_of([&] { etale_torsion_lift(0, -2, L); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("the connected 7-torsion point over Q_7(zeta_7)") {
  auto Av = formal_torsion_cyclotomic(-2);
  CHECK(Av.level == 1);

  const auto& P = Av.point;
  REQUIRE_FALSE(P.inf);
  CHECK(kv_valuation(P.x) == -2);
  CHECK(kv_valuation(P.y) == -3);

  const auto& L = P.x.field();
  CHECK(L->e == 6);
  LocalFieldElement A0 = LocalFieldElement::zero(L);
  LocalFieldElement B = LocalFieldElement::from_integer(L, -2);
  CHECK(on_curve(P, A0, B));
  CHECK(ec_scalar_mul(mpz_class(7), P, A0).inf);
  CHECK_FALSE(ec_scalar_mul(mpz_class(2), P, A0).inf);

  // x^3 really is the non-unit branch
  auto [theta, theta2] = seventh_torsion_theta(-2, L->precision);
  (void)theta;
  CHECK((P.x.pow_ui(3) - LocalFieldElement::from_padic(L, theta2)).is_zero());

  CHECK(code_of([] { formal_torsion_cyclotomic(-2, 5); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { formal_torsion_cyclotomic(9); }) ==
        ErrorCode::WrongResidueClass);
}
