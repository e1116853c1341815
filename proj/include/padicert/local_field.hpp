// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_LOCAL_FIELD_HPP
#define PADICERT_LOCAL_FIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "padicert/error.hpp"
#include "padicert/finite_field.hpp"
#include "padicert/padic.hpp"

namespace padicert {

// A finite extension of Q_p, either unramified of degree f or the
// cyclotomic field Q_p(zeta_p), which is totally ramified of degree p-1.
// The generator is a root of `defining`; for the cyclotomic field it is
// the uniformizer pi_L = zeta_p - 1, with Eisenstein minimal polynomial
// ((1+x)^p - 1)/x whose constant term is p.
struct LocalField {
  enum class Kind { Unramified, Cyclotomic };

  Kind kind = Kind::Unramified;
  long p = 0;
  long e = 1;  // ramification index
  long f = 1;  // residue degree
  long degree = 1;
  long precision = kDefaultPrecision;     // default coefficient precision
  std::vector<mpz_class> defining;        // monic, ascending, degree = e*f

  static std::shared_ptr<const LocalField> cyclotomic(
      long p, long N = kDefaultPrecision);
  static std::shared_ptr<const LocalField> unramified(
      long p, long f, long N = kDefaultPrecision);
};
using LocalFieldPtr = std::shared_ptr<const LocalField>;

// Normalized valuation v_L with v_L(p) = e.  `exact` is false when the
// element is indistinguishable from zero deep enough that only a lower
// bound is known; downstream predicates treat that as PrecisionExhausted.
struct ExtValuation {
  long value = 0;
  bool exact = true;
};

// Polynomial of degree < e*f in the field generator with PadicNumber
// coefficients.  Immutable; all operations are pure.
class LocalFieldElement {
 public:
  LocalFieldElement() = default;  // invalid until assigned

  static LocalFieldElement zero(const LocalFieldPtr& L);
  static LocalFieldElement one(const LocalFieldPtr& L);
  static LocalFieldElement from_integer(const LocalFieldPtr& L,
                                        const mpz_class& n);
  static LocalFieldElement from_padic(const LocalFieldPtr& L,
                                      const PadicNumber& x);
  static LocalFieldElement from_coeffs(const LocalFieldPtr& L,
                                       std::vector<PadicNumber> c);
  // the class of x modulo the defining polynomial: pi_L for cyclotomic
  // fields, a lift of the residue-field generator for unramified ones
  static LocalFieldElement generator(const LocalFieldPtr& L);
  // zeta_p = 1 + pi_L (cyclotomic fields only)
  static LocalFieldElement zeta(const LocalFieldPtr& L);

  const LocalFieldPtr& field() const { return L_; }
  const PadicNumber& coeff(long i) const {
    return c_.at(static_cast<size_t>(i));
  }
  bool is_zero() const;  // indistinguishable from zero at its precision

  LocalFieldElement operator-() const;
  LocalFieldElement operator+(const LocalFieldElement& o) const;
  LocalFieldElement operator-(const LocalFieldElement& o) const;
  LocalFieldElement operator*(const LocalFieldElement& o) const;
  LocalFieldElement operator/(const LocalFieldElement& o) const;
  LocalFieldElement inverse() const;
  LocalFieldElement pow_ui(unsigned long k) const;
  // multiplication by an exact integer scalar
  LocalFieldElement scale(const mpz_class& n) const;

  ExtValuation valuation() const;
  // reduction to F_{p^f}; requires v_L >= 0
  FqElement residue() const;

  std::string str() const;

 private:
  LocalFieldElement(LocalFieldPtr L, std::vector<PadicNumber> c)
      : L_(std::move(L)), c_(std::move(c)) {}

  LocalFieldPtr L_;
  std::vector<PadicNumber> c_;
};

inline bool kv_is_zero(const LocalFieldElement& x) { return x.is_zero(); }

// The largest i with u in U_L^i = 1 + m_L^i, i.e. v_L(u - 1).
long unit_filtration_level(const LocalFieldElement& u);

// Newton-Hensel lifting over L: requires v_L(f(seed)) > 2 v_L(f'(seed)).
// f is given by ascending coefficients.
LocalFieldElement hensel_root_ext(const std::vector<LocalFieldElement>& f,
                                  const LocalFieldElement& seed);

}  // namespace padicert

#endif
