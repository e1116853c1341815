// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_PADIC_HPP
#define PADICERT_PADIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "padicert/error.hpp"

namespace padicert {

// Default absolute precision for the whole library.  The certification
// pipeline needs valuations near -2 and filtration levels near p-1 = 6;
// 24 digits leaves a wide safety margin and doubles on demand.
inline constexpr long kDefaultPrecision = 24;

mpz_class pow_p(long p, long k);

// An element of Q_p known to absolute precision N, i.e. modulo p^N.
//
// Nonzero elements are stored as p^val * unit with the unit kept modulo
// p^(N - val); an element indistinguishable from 0 at precision N is stored
// as zero-at-O(p^N), never as an "exact" zero.  Valuation queries on such an
// element answer ">= N" instead of fabricating exactness.
//
// Values are immutable after construction; all operations are pure.
class PadicNumber {
 public:
  PadicNumber() : p_(0), zero_(true), val_(0), prec_(0) {}

  static PadicNumber zero(long p, long N);
  // num/den at absolute precision N.  den may be divisible by p (negative
  // valuation results are fine); den = 0 is rejected.
  static PadicNumber from_rational(const mpz_class& num, const mpz_class& den,
                                   long p, long N);
  static PadicNumber from_integer(const mpz_class& n, long p, long N) {
    return from_rational(n, 1, p, N);
  }
  // Raw constructor: p^val * unit at absolute precision abs_prec.
  static PadicNumber from_unit(long p, long val, const mpz_class& unit,
                               long abs_prec);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  // Absolute precision N: the value is known modulo p^N.
  long precision() const { return prec_; }
  // Exact valuation; only meaningful for nonzero elements.
  long valuation() const;
  // Lower bound on the valuation: exact for nonzero, N for zero-at-O(p^N).
  long valuation_bound() const { return zero_ ? prec_ : val_; }
  long rel_precision() const { return zero_ ? 0 : prec_ - val_; }
  const mpz_class& unit() const { return unit_; }

  PadicNumber operator-() const;
  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-(const PadicNumber& o) const;
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator/(const PadicNumber& o) const;

  // Multiplication by an exact integer scalar (no relative-precision loss
  // beyond the scalar's own p-valuation shift).
  PadicNumber scale(const mpz_class& c) const;
  PadicNumber pow_ui(unsigned long k) const;

  // Reduce to a lower absolute precision (identity if N >= precision()).
  PadicNumber truncate(long N) const;
  // Equality modulo p^min(precisions).
  bool same_value(const PadicNumber& o) const;
  // Bitwise representation equality (value, valuation and precision).
  bool operator==(const PadicNumber& o) const;

  // Value modulo p for integral elements (v >= 0); 0 for zero-at-precision.
  long residue() const;
  // Digit a_i of the expansion sum a_i p^i, for valuation() <= i < N.
  long digit(long i) const;
  // Rendering in the form "a0 + a1*p + ... + O(p^N)", nonzero digits only.
  std::string str() const;

  // The value as an integer multiple of p^val modulo p^N; requires val >= 0.
  mpz_class lift() const;

 private:
  PadicNumber(long p, bool zero, long val, const mpz_class& unit, long prec)
      : p_(p), zero_(zero), val_(val), unit_(unit), prec_(prec) {}

  long p_;
  bool zero_;
  long val_;
  mpz_class unit_;
  long prec_;
};

// --- padic-core operations ---------------------------------------------

inline PadicNumber embed_rational(const mpz_class& num, const mpz_class& den,
                                  long p, long N) {
  return PadicNumber::from_rational(num, den, p, N);
}

// Simple-root Hensel lifting for an integer-coefficient polynomial given by
// ascending coefficients.  Requires f(seed) = 0 mod p and f'(seed) != 0
// mod p; raises NoSimpleRoot otherwise.  Callers with non-simple situations
// (e.g. roots of elements of negative valuation) must rescale first.
PadicNumber hensel_root(const std::vector<mpz_class>& f, long seed, long p,
                        long N);

// Square root with the branch fixed by seed (seed^2 = unit mod p).
PadicNumber sqrt(const PadicNumber& x, long seed);

// The unique (p-1)-st root of unity congruent to a mod p.
PadicNumber teichmuller(long a, long p, long N);

}  // namespace padicert

#endif
