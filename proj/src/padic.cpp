// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/padic.hpp"

#include <algorithm>
#include <sstream>

namespace padicert {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::DivisionByZeroAtPrecision: return "DivisionByZeroAtPrecision";
    case ErrorCode::NoSimpleRoot: return "NoSimpleRoot";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::OddValuation: return "OddValuation";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::NotAOneUnit: return "NotAOneUnit";
    case ErrorCode::HenselConditionFailed: return "HenselConditionFailed";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::HasseViolation: return "HasseViolation";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::NotInSubgroup: return "NotInSubgroup";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::NoPrimaryRepresentative: return "NoPrimaryRepresentative";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::NotInFormalGroup: return "NotInFormalGroup";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::NotSimpleRoot: return "NotSimpleRoot";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::SplitAssumptionViolated: return "SplitAssumptionViolated";
    case ErrorCode::TorsionPoint: return "TorsionPoint";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::BadDataset: return "BadDataset";
  }
  return "Unknown";
}

mpz_class pow_p(long p, long k) {
  if (k < 0) raise(ErrorCode::Internal, "negative power of p requested");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  return r;
}

namespace {

void check_odd_prime(long p) {
  // p = 2 is rejected everywhere: the certification theory assumes p >= 5
  // and the branch bookkeeping (square roots, sixth powers) needs p odd.
  if (p < 3) raise(ErrorCode::BadPrime, "p must be an odd prime");
  mpz_class z = p;
  if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    raise(ErrorCode::BadPrime, "p must be an odd prime");
}

mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inv_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    raise(ErrorCode::DivisionByZeroAtPrecision, "no inverse modulo p^k");
  return r;
}

// v_p of a nonzero integer, removing the power in place.
long strip_p(mpz_class& n, long p) {
  mpz_class q = p;
  return static_cast<long>(
      mpz_remove(n.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

}  // namespace

PadicNumber PadicNumber::zero(long p, long N) {
  check_odd_prime(p);
  if (N < 0) N = 0;
  return PadicNumber(p, true, 0, 0, N);
}

PadicNumber PadicNumber::from_unit(long p, long val, const mpz_class& unit,
                                   long abs_prec) {
  check_odd_prime(p);
  if (abs_prec <= val) return zero(p, abs_prec);
  mpz_class u = mod_nonneg(unit, pow_p(p, abs_prec - val));
  if (u == 0) return zero(p, abs_prec);
  if (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p)))
    raise(ErrorCode::Internal, "unit divisible by p");
  return PadicNumber(p, false, val, u, abs_prec);
}

PadicNumber PadicNumber::from_rational(const mpz_class& num,
                                       const mpz_class& den, long p, long N) {
  check_odd_prime(p);
  if (den == 0) raise(ErrorCode::InvalidArgument, "zero denominator");
  if (N < 1) raise(ErrorCode::InvalidArgument, "precision must be >= 1");
  if (num == 0) return zero(p, N);
  mpz_class nu = num, de = den;
  long v = strip_p(nu, p) - strip_p(de, p);
  if (v >= N) return zero(p, N);
  mpz_class m = pow_p(p, N - v);
  mpz_class u = mod_nonneg(nu * inv_mod(mod_nonneg(de, m), m), m);
  return PadicNumber(p, false, v, u, N);
}

long PadicNumber::valuation() const {
  if (zero_)
    raise(ErrorCode::PrecisionExhausted,
          "valuation of zero-at-O(p^" + std::to_string(prec_) +
              ") is only bounded below");
  return val_;
}

PadicNumber PadicNumber::operator-() const {
  if (zero_) return *this;
  return from_unit(p_, val_, pow_p(p_, prec_ - val_) - unit_, prec_);
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
  if (p_ != o.p_) raise(ErrorCode::InvalidArgument, "mixed primes");
  long N = std::min(prec_, o.prec_);
  if (zero_ && o.zero_) return zero(p_, N);
  // Work with integer representatives scaled by p^shift so that negative
  // valuations become honest integers; reduce modulo p^(N + shift).
  long vmin = 0;
  if (!zero_) vmin = std::min(vmin, val_);
  if (!o.zero_) vmin = std::min(vmin, o.val_);
  long shift = -vmin;
  mpz_class m = pow_p(p_, N + shift);
  mpz_class s = 0;
  if (!zero_ && val_ < N) s += pow_p(p_, val_ + shift) * unit_;
  if (!o.zero_ && o.val_ < N) s += pow_p(p_, o.val_ + shift) * o.unit_;
  s = mod_nonneg(s, m);
  if (s == 0) return zero(p_, N);
  long v = strip_p(s, p_) - shift;
  return from_unit(p_, v, s, N);
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const {
  return *this + (-o);
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
  if (p_ != o.p_) raise(ErrorCode::InvalidArgument, "mixed primes");
  // v(xy) = v(x) + v(y); relative precision is the min of the operands'.
  if (zero_ || o.zero_) {
    long bound = valuation_bound() + o.valuation_bound();
    return zero(p_, bound);
  }
  long r = std::min(prec_ - val_, o.prec_ - o.val_);
  long v = val_ + o.val_;
  mpz_class u = mod_nonneg(unit_ * o.unit_, pow_p(p_, r));
  return from_unit(p_, v, u, v + r);
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
  if (p_ != o.p_) raise(ErrorCode::InvalidArgument, "mixed primes");
  if (o.zero_)
    raise(ErrorCode::DivisionByZeroAtPrecision,
          "divisor indistinguishable from 0 at O(p^" +
              std::to_string(o.prec_) + ")");
  if (zero_) return zero(p_, prec_ - o.val_);
  long r = std::min(prec_ - val_, o.prec_ - o.val_);
  long v = val_ - o.val_;
  mpz_class m = pow_p(p_, r);
  mpz_class u = mod_nonneg(unit_ * inv_mod(o.unit_, m), m);
  return from_unit(p_, v, u, v + r);
}

PadicNumber PadicNumber::scale(const mpz_class& c) const {
  if (c == 0) return zero(p_, zero_ ? prec_ : prec_ + 1);
  mpz_class u = c;
  long vc = strip_p(u, p_);
  if (zero_) return zero(p_, prec_ + vc);
  long r = prec_ - val_;
  return from_unit(p_, val_ + vc, mod_nonneg(unit_ * u, pow_p(p_, r)),
                   val_ + vc + r);
}

PadicNumber PadicNumber::pow_ui(unsigned long k) const {
  if (k == 0) {
    if (p_ == 0) raise(ErrorCode::InvalidArgument, "pow of uninitialized");
    return from_integer(1, p_, zero_ ? prec_ : prec_ - val_);
  }
  PadicNumber acc = *this;
  for (unsigned long i = 1; i < k; ++i) acc = acc * *this;
  return acc;
}

PadicNumber PadicNumber::truncate(long N) const {
  if (N >= prec_) return *this;
  if (zero_ || val_ >= N) return zero(p_, N);
  return from_unit(p_, val_, mod_nonneg(unit_, pow_p(p_, N - val_)), N);
}

bool PadicNumber::same_value(const PadicNumber& o) const {
  if (p_ != o.p_) return false;
  long N = std::min(prec_, o.prec_);
  PadicNumber d = truncate(N) - o.truncate(N);
  return d.is_zero();
}

bool PadicNumber::operator==(const PadicNumber& o) const {
  return p_ == o.p_ && zero_ == o.zero_ && prec_ == o.prec_ &&
         (zero_ || (val_ == o.val_ && unit_ == o.unit_));
}

long PadicNumber::residue() const {
  if (zero_) return 0;
  if (val_ < 0)
    raise(ErrorCode::InvalidArgument, "residue of non-integral element");
  if (val_ > 0) return 0;
  return static_cast<long>(mpz_fdiv_ui(unit_.get_mpz_t(),
                                       static_cast<unsigned long>(p_)));
}

long PadicNumber::digit(long i) const {
  if (i >= prec_)
    raise(ErrorCode::InvalidArgument, "digit beyond known precision");
  if (zero_ || i < val_) return 0;
  mpz_class q = unit_ / pow_p(p_, i - val_);
  return static_cast<long>(mpz_fdiv_ui(q.get_mpz_t(),
                                       static_cast<unsigned long>(p_)));
}

std::string PadicNumber::str() const {
  std::ostringstream os;
  bool first = true;
  if (!zero_) {
    for (long i = val_; i < prec_; ++i) {
      long d = digit(i);
      if (d == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << d;
      } else {
        if (d != 1) os << d << "*";
        os << p_;
        if (i != 1) os << "^" << i;
      }
    }
  }
  if (!first) os << " + ";
  os << "O(" << p_ << "^" << prec_ << ")";
  return os.str();
}

mpz_class PadicNumber::lift() const {
  if (zero_) return 0;
  if (val_ < 0) raise(ErrorCode::InvalidArgument, "lift of non-integral element");
  return pow_p(p_, val_) * unit_;
}

// --- Hensel / Newton -----------------------------------------------------

namespace {

mpz_class poly_eval_mod(const std::vector<mpz_class>& f, const mpz_class& x,
                        const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    acc = mod_nonneg(acc * x + *it, m);
  return acc;
}

std::vector<mpz_class> poly_derivative(const std::vector<mpz_class>& f) {
  std::vector<mpz_class> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mpz_class(i) * f[i]);
  if (d.empty()) d.push_back(0);
  return d;
}

}  // namespace

PadicNumber hensel_root(const std::vector<mpz_class>& f, long seed, long p,
                        long N) {
  check_odd_prime(p);
  if (f.empty()) raise(ErrorCode::InvalidArgument, "empty polynomial");
  mpz_class pz = p;
  std::vector<mpz_class> fd = poly_derivative(f);
  mpz_class x = mod_nonneg(seed, pz);
  if (poly_eval_mod(f, x, pz) != 0)
    raise(ErrorCode::NoSimpleRoot, "seed is not a root mod p");
  if (poly_eval_mod(fd, x, pz) == 0)
    raise(ErrorCode::NoSimpleRoot,
          "f'(seed) = 0 mod p; rescale to a simple-root equation first");
  // Newton with doubling modulus: correctness to p^k doubles per step.
  long k = 1;
  while (k < N) {
    k = std::min(2 * k, N);
    mpz_class m = pow_p(p, k);
    mpz_class fx = poly_eval_mod(f, x, m);
    mpz_class fpx = poly_eval_mod(fd, x, m);
    x = mod_nonneg(x - fx * inv_mod(fpx, m), m);
  }
  mpz_class check = poly_eval_mod(f, x, pow_p(p, N));
  if (check != 0) raise(ErrorCode::Internal, "Newton failed to converge");
  return PadicNumber::from_integer(x, p, N);
}

PadicNumber sqrt(const PadicNumber& x, long seed) {
  long p = x.prime();
  if (x.is_zero()) {
    // v(x) >= N forces v(sqrt) >= ceil(N/2).
    return PadicNumber::zero(p, (x.precision() + 1) / 2);
  }
  long v = x.valuation();
  if (v % 2 != 0)
    raise(ErrorCode::OddValuation, "square root of odd-valuation element");
  mpz_class u = x.unit();
  long r = x.rel_precision();
  long u0 = static_cast<long>(mpz_fdiv_ui(u.get_mpz_t(),
                                          static_cast<unsigned long>(p)));
  mpz_class euler;
  mpz_powm_ui(euler.get_mpz_t(), mpz_class(u0).get_mpz_t(),
              static_cast<unsigned long>((p - 1) / 2),
              mpz_class(p).get_mpz_t());
  if (euler != 1)
    raise(ErrorCode::NotASquare, "unit part is not a quadratic residue");
  long s = ((seed % p) + p) % p;
  if ((s * s - u0) % p != 0)
    raise(ErrorCode::InvalidArgument, "seed^2 != unit mod p");
  // Newton for t^2 = u; the root with t = seed mod p is unique mod p^r.
  mpz_class t = s;
  long k = 1;
  while (k < r) {
    k = std::min(2 * k, r);
    mpz_class m = pow_p(p, k);
    t = mod_nonneg((t + mod_nonneg(u, m) * inv_mod(t, m)) * inv_mod(2, m), m);
  }
  return PadicNumber::from_unit(p, v / 2, t, v / 2 + r);
}

PadicNumber teichmuller(long a, long p, long N) {
  check_odd_prime(p);
  if (a < 1 || a > p - 1)
    raise(ErrorCode::InvalidArgument, "representative must be in [1, p-1]");
  mpz_class m = pow_p(p, N);
  mpz_class x = a;
  // x -> x^p gains at least one correct digit per step and fixes the limit.
  for (long i = 0; i < N + 1; ++i)
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p),
                m.get_mpz_t());
  return PadicNumber::from_unit(p, 0, x, N);
}

}  // namespace padicert
