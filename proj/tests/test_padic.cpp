// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/padic.hpp"

#include <optional>
#include <random>
#include <vector>

#include "doctest.h"

using namespace padicert;

namespace {

std::vector<long> digits_of(const PadicNumber& x, long upto) {
  std::vector<long> d;
  for (long i = 0; i < upto; ++i) d.push_back(x.digit(i));
  return d;
}

template <typename F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("embed_rational basic shapes") {
  auto a = embed_rational(7, 2, 7, 4);
  CHECK(a.valuation() == 1);
  CHECK(a.unit() % 7 == 4);
  CHECK(a.precision() == 4);

  auto z = embed_rational(0, 1, 7, 4);
  CHECK(z.is_zero());
  CHECK(z.precision() == 4);
  CHECK(z.valuation_bound() == 4);

  auto b = embed_rational(-2, 7, 7, 4);
  CHECK(b.valuation() == -1);
  CHECK(b.unit() % 7 == 5);

  CHECK(code_of([] { embed_rational(1, 0, 7, 4); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { embed_rational(1, 1, 4, 4); }) == ErrorCode::BadPrime);
  CHECK(code_of([] { embed_rational(1, 1, 2, 4); }) == ErrorCode::BadPrime);
}

TEST_CASE("arithmetic precision bookkeeping") {
  auto one = embed_rational(1, 1, 7, 4);
  auto minus_one = embed_rational(-1, 1, 7, 4);
  auto s = one + minus_one;
  CHECK(s.is_zero());
  CHECK(s.precision() == 4);

  auto seven = embed_rational(7, 1, 7, 5);
  auto sq = seven * seven;
  CHECK(sq.valuation() == 2);
  CHECK(sq.same_value(embed_rational(49, 1, 7, 6)));
  // relative precision 4 on both factors, so absolute 2 + 4
  CHECK(sq.precision() == 6);

  auto r = sqrt(embed_rational(-3, 1, 7, 4), 2);
  auto back = r * r + embed_rational(3, 1, 7, 4);
  CHECK(back.is_zero());
  CHECK(back.precision() == 4);

  // min-precision rule for add/sub
  auto wide = embed_rational(5, 3, 7, 9);
  auto narrow = embed_rational(1, 2, 7, 3);
  CHECK((wide + narrow).precision() == 3);
  CHECK((wide - narrow).precision() == 3);
}

TEST_CASE("zero-at-precision propagation") {
  auto z5 = PadicNumber::zero(7, 5);
  auto z3 = PadicNumber::zero(7, 3);
  CHECK((z5 + z3).is_zero());
  CHECK((z5 + z3).precision() == 3);

  auto x = embed_rational(49, 1, 7, 10);  // valuation 2
  auto prod = z3 * x;
  CHECK(prod.is_zero());
  CHECK(prod.precision() == 5);  // 3 + v(x)

  auto quo = z3 / x;
  CHECK(quo.is_zero());
  CHECK(quo.precision() == 1);  // 3 - v(x)

  CHECK(code_of([&] { (void)(x / z3); }) ==
        ErrorCode::DivisionByZeroAtPrecision);
  CHECK(code_of([&] { (void)z3.valuation(); }) ==
        ErrorCode::PrecisionExhausted);
}

TEST_CASE("hensel_root on sqrt(-3) and cbrt(6)") {
  auto r = hensel_root({3, 0, 1}, 2, 7, 4);  // x^2 + 3
  CHECK(digits_of(r, 4) == std::vector<long>{2, 5, 0, 6});
  CHECK(r.lift() == 2095);

  auto c = hensel_root({-6, 0, 0, 1}, 3, 7, 12);  // x^3 - 6
  CHECK(c.residue() == 3);
  auto cube = c * c * c - embed_rational(6, 1, 7, 12);
  CHECK(cube.is_zero());

  // x^2 - 11: 11 = 4 mod 7, branch with residue 2
  auto t = hensel_root({-11, 0, 1}, 2, 7, 8);
  CHECK(t.residue() == 2);
  CHECK((t * t).same_value(embed_rational(11, 1, 7, 8)));

  CHECK(code_of([] { hensel_root({1, 0, 1}, 3, 7, 4); }) ==
        ErrorCode::NoSimpleRoot);  // 3^2 + 1 = 10 != 0 mod 7
  CHECK(code_of([] { hensel_root({0, 0, 1}, 0, 7, 4); }) ==
        ErrorCode::NoSimpleRoot);  // double root of x^2 at 0
}

TEST_CASE("sqrt branches and frozen digits") {
  auto four = embed_rational(4, 1, 7, 4);
  CHECK(sqrt(four, 2).lift() == 2);
  CHECK(sqrt(four, 5).same_value(embed_rational(-2, 1, 7, 4)));

  auto m3 = embed_rational(-3, 1, 7, 8);
  auto r = sqrt(m3, 2);
  CHECK(digits_of(r, 8) == std::vector<long>{2, 5, 0, 6, 5, 2, 1, 1});
  CHECK(sqrt(m3, 5).same_value(-r));

  // deep-precision freeze of the canonical sqrt(-3) in Q_7
  auto deep = sqrt(embed_rational(-3, 1, 7, 24), 2);
  CHECK(deep.lift() == mpz_class("148927874023090366346"));

  // even-valuation scaling: sqrt(49 * u) = 7 * sqrt(u)
  auto scaled = sqrt(m3.scale(49), 2);
  CHECK(scaled.valuation() == 1);
  CHECK((scaled / embed_rational(7, 1, 7, 8)).same_value(r));

  CHECK(code_of([] { sqrt(embed_rational(7, 1, 7, 4), 1); }) ==
        ErrorCode::OddValuation);
  CHECK(code_of([] { sqrt(embed_rational(3, 1, 7, 4), 1); }) ==
        ErrorCode::NotASquare);  // 3 is not a QR mod 7
  CHECK(code_of([] { sqrt(embed_rational(4, 1, 7, 4), 3); }) ==
        ErrorCode::InvalidArgument);  // wrong seed branch

  auto zr = sqrt(PadicNumber::zero(7, 9), 0);
  CHECK(zr.is_zero());
  CHECK(zr.precision() == 5);
}

TEST_CASE("teichmuller lifts") {
  CHECK(teichmuller(1, 7, 10).lift() == 1);

  auto w2 = teichmuller(2, 7, 4);
  CHECK(digits_of(w2, 4) == std::vector<long>{2, 4, 6, 3});
  CHECK((w2 * w2 * w2).same_value(embed_rational(1, 1, 7, 4)));

  auto w4 = teichmuller(4, 7, 4);
  CHECK(digits_of(w4, 4) == std::vector<long>{4, 2, 0, 3});
  // w4 = (-1 + sqrt(-3))/2 for the residue-2 branch
  auto s = sqrt(embed_rational(-3, 1, 7, 4), 2);
  auto half = (embed_rational(-1, 1, 7, 4) + s) / embed_rational(2, 1, 7, 4);
  CHECK(half.same_value(w4));

  CHECK(code_of([] { teichmuller(0, 7, 4); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { teichmuller(7, 7, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("digit expansion rendering") {
  CHECK(embed_rational(-3, 1, 7, 4).str() == "4 + 6*7 + 6*7^2 + 6*7^3 + O(7^4)");
  CHECK(sqrt(embed_rational(-3, 1, 7, 4), 2).str() ==
        "2 + 5*7 + 6*7^3 + O(7^4)");
  CHECK(PadicNumber::zero(7, 4).str() == "O(7^4)");
  CHECK(embed_rational(1, 7, 7, 3).str() == "7^-1 + O(7^3)");
  CHECK(embed_rational(3, 49, 7, 3).str() == "3*7^-2 + O(7^3)");
  CHECK(embed_rational(7, 1, 7, 3).str() == "7 + O(7^3)");
}

TEST_CASE("rational model property") {
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<long> num(-200, 200);
  std::uniform_int_distribution<long> den(1, 60);
  const long N = 18;
  for (long p : {7L, 13L}) {
    for (int trial = 0; trial < 200; ++trial) {
      long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
      if (b % p == 0 || d % p == 0) continue;
      mpq_class x(a, b), y(c, d);
      x.canonicalize();
      y.canonicalize();
      auto px = embed_rational(a, b, p, N);
      auto py = embed_rational(c, d, p, N);

      mpq_class sum = x + y, dif = x - y, pro = x * y;
      CHECK((px + py).same_value(embed_rational(sum.get_num(), sum.get_den(), p, N)));
      CHECK((px - py).same_value(embed_rational(dif.get_num(), dif.get_den(), p, N)));
      CHECK((px * py).same_value(embed_rational(pro.get_num(), pro.get_den(), p, N)));
      if (c != 0) {
        mpq_class quo = x / y;
        CHECK((px / py).same_value(
            embed_rational(quo.get_num(), quo.get_den(), p, N)));
      }
    }
  }
}

TEST_CASE("precision monotonicity is bit-exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 90);
  const long N = 10;
  for (int trial = 0; trial < 200; ++trial) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    if (b % 7 == 0 || d % 7 == 0 || c == 0) continue;
    auto xs = embed_rational(a, b, 7, N);
    auto ys = embed_rational(c, d, 7, N);
    auto xw = embed_rational(a, b, 7, 2 * N);
    auto yw = embed_rational(c, d, 7, 2 * N);
    auto narrow_add = xs + ys;
    auto narrow_mul = xs * ys;
    auto narrow_div = xs / ys;
    CHECK((xw + yw).truncate(narrow_add.precision()) == narrow_add);
    CHECK((xw * yw).truncate(narrow_mul.precision()) == narrow_mul);
    CHECK((xw / yw).truncate(narrow_div.precision()) == narrow_div);
  }
}

TEST_CASE("hensel re-substitution property") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-20, 20);
  const long p = 7, N = 12;
  int lifted = 0;
  for (int trial = 0; trial < 120 && lifted < 40; ++trial) {
    std::vector<mpz_class> f;
    int deg = 2 + static_cast<int>(trial % 3);
    for (int i = 0; i <= deg; ++i) f.push_back(coef(rng));
    if (f.back() == 0) f.back() = 1;
    for (long s = 0; s < p; ++s) {
      mpz_class fs = 0, fps = 0;
      for (int i = deg; i >= 0; --i) fs = fs * s + f[i];
      for (int i = deg; i >= 1; --i) fps = fps * s + mpz_class(i) * f[i];
      if (fs % p != 0 || fps % p == 0) continue;
      auto root = hensel_root(f, s, p, N);
      PadicNumber acc = PadicNumber::zero(p, N);
      for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = acc * root + embed_rational(*it, 1, p, N);
      CHECK(acc.is_zero());
      CHECK(acc.precision() >= N);
      ++lifted;
      break;
    }
  }
  CHECK(lifted >= 20);
}

TEST_CASE("sqrt and teichmuller identities") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> num(1, 400);
  std::uniform_int_distribution<long> den(1, 50);
  const long N = 16;
  for (long p : {7L, 13L}) {
    for (int trial = 0; trial < 80; ++trial) {
      long a = num(rng), b = den(rng);
      if (a % p == 0 || b % p == 0) continue;
      auto q = embed_rational(a, b, p, N);
      auto sq = q * q;
      long seed = q.residue() == 0 ? 0 : q.residue();
      auto r = sqrt(sq, seed);
      CHECK((r * r).same_value(sq));
      CHECK(r.same_value(q));
    }
    auto one = embed_rational(1, 1, p, N);
    for (long a = 1; a < p; ++a) {
      auto w = teichmuller(a, p, N);
      CHECK(w.residue() == a);
      CHECK(w.pow_ui(static_cast<unsigned long>(p - 1)).same_value(one));
    }
  }
}

TEST_CASE("scale and truncate") {
  auto x = embed_rational(3, 1, 7, 6);
  auto y = x.scale(14);
  CHECK(y.valuation() == 1);
  CHECK(y.precision() == 7);
  CHECK(y.same_value(embed_rational(42, 1, 7, 7)));
  CHECK(x.scale(0).is_zero());

  auto t = embed_rational(2095, 1, 7, 4).truncate(2);
  CHECK(t.precision() == 2);
  CHECK(t.lift() == 37);  // 2 + 5*7
  CHECK(embed_rational(49, 1, 7, 5).truncate(2).is_zero());
}
