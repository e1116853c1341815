// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_CURVE_HPP
#define PADICERT_CURVE_HPP

#include <gmpxx.h>

#include <utility>

#include "padicert/error.hpp"
#include "padicert/padic.hpp"

namespace padicert {

// Short Weierstrass arithmetic y^2 = x^3 + Ax + B over a field-like
// coefficient type K.  K needs +, -, unary -, *, / and a kv_is_zero
// overload visible from here.  Over Q_p "zero" means indistinguishable
// from zero at the working precision; the chord-and-tangent trichotomy
// below is then decided at that precision, and any genuinely ambiguous
// configuration surfaces as a division failure for the caller to handle
// by raising precision.
template <typename K>
struct Point {
  K x{};
  K y{};
  bool inf = true;

  static Point infinity() { return Point{}; }
  static Point affine(K px, K py) {
    return Point{std::move(px), std::move(py), false};
  }
};

inline bool kv_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool kv_is_zero(const PadicNumber& x) { return x.is_zero(); }

template <typename K>
Point<K> ec_neg(const Point<K>& P) {
  if (P.inf) return P;
  return Point<K>::affine(P.x, -P.y);
}

template <typename K>
bool ec_eq(const Point<K>& P, const Point<K>& Q) {
  if (P.inf || Q.inf) return P.inf && Q.inf;
  return kv_is_zero(P.x - Q.x) && kv_is_zero(P.y - Q.y);
}

template <typename K>
Point<K> ec_add(const Point<K>& P, const Point<K>& Q, const K& A) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  K dx = Q.x - P.x;
  K num, den;
  if (kv_is_zero(dx)) {
    if (kv_is_zero(P.y + Q.y)) return Point<K>::infinity();
    // tangent line; constants built additively so K needs no int conversion
    K sx = P.x * P.x;
    num = sx + sx + sx + A;
    den = P.y + P.y;
  } else {
    num = Q.y - P.y;
    den = dx;
  }
  K lam = num / den;
  K x3 = lam * lam - P.x - Q.x;
  K y3 = lam * (P.x - x3) - P.y;
  return Point<K>::affine(std::move(x3), std::move(y3));
}

template <typename K>
Point<K> ec_sub(const Point<K>& P, const Point<K>& Q, const K& A) {
  return ec_add(P, ec_neg(Q), A);
}

template <typename K>
Point<K> ec_scalar_mul(const mpz_class& k, const Point<K>& P, const K& A) {
  if (P.inf || k == 0) return Point<K>::infinity();
  Point<K> base = k < 0 ? ec_neg(P) : P;
  mpz_class n = abs(k);
  Point<K> acc = Point<K>::infinity();
  for (long i = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
       i >= 0; --i) {
    acc = ec_add(acc, acc, A);
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      acc = ec_add(acc, base, A);
  }
  return acc;
}

template <typename K>
bool on_curve(const Point<K>& P, const K& A, const K& B) {
  if (P.inf) return true;
  return kv_is_zero(P.y * P.y - ((P.x * P.x + A) * P.x + B));
}

}  // namespace padicert

#endif
