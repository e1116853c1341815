// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_FINITE_FIELD_HPP
#define PADICERT_FINITE_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "padicert/curve.hpp"
#include "padicert/error.hpp"

namespace padicert {

// Immutable descriptor of F_{p^f}; elements keep a shared pointer to it.
// The defining polynomial is pinned per (p, f): the first irreducible monic
// in index order (constant coefficient fastest), so F_25 is F_5[x]/(x^2+2)
// and F_49 is F_7[x]/(x^2+1) in every run.
struct FqField {
  long p = 0;
  long f = 1;
  long q = 0;                 // p^f, small enough to enumerate
  std::vector<long> modulus;  // monic of degree f, ascending coefficients

  static std::shared_ptr<const FqField> get(long p, long f);
};
using FqFieldPtr = std::shared_ptr<const FqField>;

class FqElement {
 public:
  FqElement() = default;  // invalid until assigned; only Point's O slot

  static FqElement zero(const FqFieldPtr& F);
  static FqElement one(const FqFieldPtr& F);
  static FqElement from_int(const FqFieldPtr& F, long n);
  // Bijection with [0, q): coefficients are the base-p digits of idx.
  static FqElement from_index(const FqFieldPtr& F, long idx);
  long index() const;

  const FqFieldPtr& field() const { return F_; }
  long coeff(long i) const { return c_.at(static_cast<size_t>(i)); }
  bool is_zero() const;

  FqElement operator-() const;
  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator*(const FqElement& o) const;
  FqElement operator/(const FqElement& o) const;
  bool operator==(const FqElement& o) const;
  bool operator!=(const FqElement& o) const { return !(*this == o); }

  FqElement pow(unsigned long e) const;
  FqElement inverse() const;
  FqElement frobenius() const;  // x -> x^p

  std::string str() const;

 private:
  FqElement(FqFieldPtr F, std::vector<long> c)
      : F_(std::move(F)), c_(std::move(c)) {}

  FqFieldPtr F_;
  std::vector<long> c_;  // size f, entries in [0, p)
};

inline bool kv_is_zero(const FqElement& x) { return x.is_zero(); }

// Exact order of E(F_q) for y^2 = x^3 + Ax + B, point at infinity included,
// by full enumeration.  q must be an odd prime power.
long count_points(long A, long B, long q);
long count_points_field(const FqElement& A, const FqElement& B);

// Legendre symbol (a/p) in {-1, 0, +1}.
int legendre(const mpz_class& a, long p);

// a_q = q + 1 - #E(F_q), with the Hasse bound enforced as a self-check.
long trace_of_frobenius(long A, long B, long q);

// The p-primary part of E(F_q) for an ordinary curve: cyclic of order
// p^N0, generated by generator; cofactor * p^N0 = group_order.
struct PPrimaryStructure {
  long N0 = 0;
  Point<FqElement> generator;
  long cofactor = 1;
  long group_order = 1;
  unsigned long prng_seed = 0;  // recorded so the generator is reproducible
};

PPrimaryStructure p_primary_generator(long A, long B, const FqFieldPtr& F,
                                      long p);

// The unique c in [0, order) with Q = cG, by brute force; order = p^N0.
long dlog_p_primary(const Point<FqElement>& Q, const Point<FqElement>& G,
                    long order, const FqElement& A);

}  // namespace padicert

#endif
