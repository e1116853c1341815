// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_CM_ORDER_HPP
#define PADICERT_CM_ORDER_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "padicert/error.hpp"

namespace padicert {

// The nine imaginary-quadratic radicands with class number one.
bool is_class_number_one(long D);

// Element a + b*w of Z[w_D], where w_D = sqrt(D) for D in {-1, -2} and
// w_D = (-1 + sqrt(D))/2 otherwise.  Immutable value type.
class QuadInt {
 public:
  QuadInt(long D, mpz_class a, mpz_class b);

  long D() const { return D_; }
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  // true when w_D = (-1 + sqrt(D))/2
  bool half_type() const { return ((D_ % 4) + 4) % 4 == 1; }

  QuadInt conj() const;
  mpz_class norm() const;
  mpz_class trace() const;

  QuadInt operator-() const;
  QuadInt operator+(const QuadInt& o) const;
  QuadInt operator-(const QuadInt& o) const;
  QuadInt operator*(const QuadInt& o) const;
  bool operator==(const QuadInt& o) const;
  bool operator!=(const QuadInt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  long D_;
  mpz_class a_, b_;
};

// The unit group of Z[w_D]: 2, 4 or 6 elements.
std::vector<QuadInt> units(long D);

// The Frobenius factor pi of p = pi * conj(pi), normalized so that
// v_p(pi) = 1 under the fixed embedding sqrt(D) -> the square root of
// D mod p with least non-negative residue.  Requires the ordinary trace
// relation a_p^2 - 4p = D v^2.
QuadInt split_frobenius(long D, long p, long a_p);

// For D = -3: the unit multiple of pi congruent to 1 modulo 3.
QuadInt primary_normalize(const QuadInt& pi);

// A primary prime of norm p in Z[w], p = 1 mod 3; deterministic choice.
QuadInt eisenstein_prime_above(long p);

// The unique unit congruent to a^((p-1)/6) modulo pi0, for p = norm(pi0).
QuadInt sixth_power_residue(const mpz_class& a, const QuadInt& pi0);

// |E_c(F_p)| for y^2 = x^3 + c via the sixth-power-residue formula
// p + 1 - (4c|pi0) conj(pi0) - (4c|conj(pi0)) pi0, p = 1 mod 3.
long count_formula_eisenstein(long c, long p);

// |E(F_p)| for the class-number-one reference curve of discriminant D in
// {-43, -67, -163}, twist parameter c, via p + 1 - sigma (2|p)(u|p)(c|p) u
// with 4p = u^2 - D v^2, u > 0.  The sign sigma is a per-(D, p) constant
// fixed against enumeration (frozen table, with a cached enumeration
// fallback for pairs outside it).
long count_formula_class_one(long c, long p, long D);

// The j-invariant model for CM discriminant D with twist parameter c,
// reduced mod p: returns (A, B) with y^2 = x^3 + Ax + B.
std::pair<long, long> cm_reference_curve(long D, long c, long p);

// Whether {x^2 = (1+D)/4, 2x = -1} has no solution in F_p.
bool conjugate_system_unsolvable(long D, long p);

}  // namespace padicert

#endif
