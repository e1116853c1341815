// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/formal.hpp"

#include <utility>

namespace padicert {

namespace {

// product of integer series truncated at degree D
std::vector<mpz_class> trunc_mul(const std::vector<mpz_class>& a,
                                 const std::vector<mpz_class>& b, long D) {
  std::vector<mpz_class> r(static_cast<size_t>(D) + 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(D); ++j)
      r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

FormalGroup::FormalGroup(mpz_class A, mpz_class B, long degree)
    : A_(std::move(A)), B_(std::move(B)), degree_(degree) {
  if (degree_ < 3)
    raise(ErrorCode::InvalidArgument, "series degree below t^3");
  // fixed point of w = t^3 + A t w^2 + B w^3; each pass extends the range
  // of correct coefficients, and the truncated iteration stabilizes
  std::vector<mpz_class> w(static_cast<size_t>(degree_) + 1, mpz_class(0));
  w[3] = 1;
  for (long pass = 0; pass < degree_; ++pass) {
    std::vector<mpz_class> w2 = trunc_mul(w, w, degree_);
    std::vector<mpz_class> w3 = trunc_mul(w2, w, degree_);
    std::vector<mpz_class> next(static_cast<size_t>(degree_) + 1,
                                mpz_class(0));
    next[3] = 1;
    for (long n = 0; n + 1 <= degree_; ++n)
      next[static_cast<size_t>(n + 1)] += A_ * w2[static_cast<size_t>(n)];
    for (long n = 0; n <= degree_; ++n)
      next[static_cast<size_t>(n)] += B_ * w3[static_cast<size_t>(n)];
    if (next == w) break;
    w = std::move(next);
  }
  c_ = std::move(w);
}

const mpz_class& FormalGroup::w_coefficient(long n) const {
  if (n < 0 || n > degree_)
    raise(ErrorCode::InvalidArgument, "coefficient index out of range");
  return c_[static_cast<size_t>(n)];
}

PadicNumber FormalGroup::w(const PadicNumber& t) const {
  PadicNumber tn = t * t * t;
  PadicNumber acc = tn;  // c_3 = 1
  for (long n = 4; n <= degree_; ++n) {
    tn = tn * t;
    const mpz_class& cn = c_[static_cast<size_t>(n)];
    if (cn != 0) acc = acc + tn.scale(cn);
  }
  return acc;
}

PadicNumber FormalGroup::add(const PadicNumber& t1,
                             const PadicNumber& t2) const {
  if (t1.prime() != t2.prime())
    raise(ErrorCode::InvalidArgument, "mixed primes");
  // slope of the chord in the (t, w) plane, division-free:
  // lambda = sum_n c_n h_n with h_n = (t2^n - t1^n)/(t2 - t1) expanded as
  // h_n = t1 h_{n-1} + t2^{n-1}
  PadicNumber h = t1 + t2;   // h_2
  PadicNumber pw = t2 * t2;  // t2^{n-1} at n = 3
  h = t1 * h + pw;
  PadicNumber lam = h;  // c_3 = 1
  for (long n = 4; n <= degree_; ++n) {
    pw = pw * t2;
    h = t1 * h + pw;
    const mpz_class& cn = c_[static_cast<size_t>(n)];
    if (cn != 0) lam = lam + h.scale(cn);
  }
  PadicNumber nu = w(t1) - lam * t1;
  // the third root of the cubic cut out by w = lambda t + nu
  PadicNumber lam2 = lam * lam;
  PadicNumber one =
      PadicNumber::from_integer(1, t1.prime(),
                                t1.precision() + t2.precision());
  PadicNumber den = one + lam2.scale(A_) + (lam2 * lam).scale(B_);
  PadicNumber num = (lam * nu).scale(2 * A_) + (lam2 * nu).scale(3 * B_);
  return t1 + t2 + num / den;
}

PadicNumber FormalGroup::mul_int(const mpz_class& n,
                                 const PadicNumber& t) const {
  if (sgn(n) == 0) return PadicNumber::zero(t.prime(), t.precision());
  PadicNumber base = sgn(n) < 0 ? -t : t;
  mpz_class m = abs(n);
  PadicNumber acc = PadicNumber::zero(t.prime(), t.precision());
  for (long i = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1;
       i >= 0; --i) {
    acc = add(acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      acc = add(acc, base);
  }
  return acc;
}

Point<PadicNumber> FormalGroup::to_affine(const PadicNumber& t) const {
  if (t.is_zero()) return Point<PadicNumber>::infinity();
  PadicNumber wt = w(t);
  PadicNumber one = PadicNumber::from_integer(1, t.prime(), t.precision());
  return Point<PadicNumber>::affine(t / wt, -(one / wt));
}

Point<FqElement> reduce_point(const Point<PadicNumber>& P) {
  if (P.inf || (!P.x.is_zero() && P.x.valuation() < 0))
    return Point<FqElement>::infinity();
  FqFieldPtr F = FqField::get(P.x.prime(), 1);
  return Point<FqElement>::affine(FqElement::from_int(F, P.x.residue()),
                                  FqElement::from_int(F, P.y.residue()));
}

Point<FqElement> reduce_point(const Point<LocalFieldElement>& P) {
  if (P.inf) return Point<FqElement>::infinity();
  if (!P.x.is_zero()) {
    ExtValuation vx = P.x.valuation();
    if (vx.value < 0) {
      if (!vx.exact)
        raise(ErrorCode::PrecisionExhausted,
              "cannot decide integrality at this precision");
      return Point<FqElement>::infinity();
    }
  }
  return Point<FqElement>::affine(P.x.residue(), P.y.residue());
}

}  // namespace padicert
