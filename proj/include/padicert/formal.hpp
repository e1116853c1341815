// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_FORMAL_HPP
#define PADICERT_FORMAL_HPP

#include <gmpxx.h>

#include <vector>

#include "padicert/curve.hpp"
#include "padicert/error.hpp"
#include "padicert/finite_field.hpp"
#include "padicert/local_field.hpp"
#include "padicert/padic.hpp"

namespace padicert {

inline long kv_valuation(const PadicNumber& x) { return x.valuation(); }
inline long kv_valuation(const LocalFieldElement& x) {
  ExtValuation v = x.valuation();
  if (!v.exact)
    raise(ErrorCode::PrecisionExhausted,
          "valuation is only bounded below at this precision");
  return v.value;
}

// The formal group of y^2 = x^3 + Ax + B with integer coefficients, in the
// chart (t, w) = (-x/y, -1/y) where w(t) = t^3 + A t w^2 + B w^3.  The
// series coefficients are exact integers cached up to a fixed t-degree;
// evaluation happens in Q_p at whatever precision the arguments carry.
// Truncation error sits above t-degree `degree`, hence beyond precision
// `degree` for parameters of level >= 1.
class FormalGroup {
 public:
  FormalGroup(mpz_class A, mpz_class B, long degree);

  long degree() const { return degree_; }
  const mpz_class& A() const { return A_; }
  const mpz_class& B() const { return B_; }
  const mpz_class& w_coefficient(long n) const;

  PadicNumber w(const PadicNumber& t) const;
  // the group law F(t1, t2) = t(P1 + P2).  Division-free slope, so
  // coincident and near-coincident parameters need no special casing.
  PadicNumber add(const PadicNumber& t1, const PadicNumber& t2) const;
  PadicNumber mul_int(const mpz_class& n, const PadicNumber& t) const;

  // (x, y) = (t/w, -1/w); the zero parameter maps to O
  Point<PadicNumber> to_affine(const PadicNumber& t) const;

 private:
  mpz_class A_;
  mpz_class B_;
  long degree_;
  std::vector<mpz_class> c_;
};

// A curve point inside the formal group together with its parameter
// t = -x/y and level = v(t) in the normalized valuation of the ambient
// field.  level >= 1 always; v(x) = -2 level and v(y) = -3 level.
template <typename K>
struct FormalPoint {
  Point<K> point;
  K t{};
  long level = 0;
};

template <typename K>
FormalPoint<K> formal_parameter(const Point<K>& P) {
  if (P.inf)
    raise(ErrorCode::NotInFormalGroup, "O carries no finite level");
  if (kv_is_zero(P.x) || kv_is_zero(P.y))
    raise(ErrorCode::NotInFormalGroup,
          "coordinates indistinguishable from zero");
  long vx = kv_valuation(P.x);
  if (vx >= 0)
    raise(ErrorCode::NotInFormalGroup, "x has nonnegative valuation");
  K t = -(P.x / P.y);
  long level = kv_valuation(t);
  if (level < 1 || vx != -2 * level || kv_valuation(P.y) != -3 * level)
    raise(ErrorCode::Internal, "Weierstrass valuations out of shape");
  return FormalPoint<K>{P, t, level};
}

// Reduction to the residue curve.  Points with v(x) < 0 reduce to O;
// integral points reduce coordinatewise.
Point<FqElement> reduce_point(const Point<PadicNumber>& P);
Point<FqElement> reduce_point(const Point<LocalFieldElement>& P);

}  // namespace padicert

#endif
