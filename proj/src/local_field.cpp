// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/local_field.hpp"

#include <algorithm>
#include <sstream>

namespace padicert {

namespace {

// precision tag for untouched accumulator slots; far above anything the
// library ever computes with, so it never clips a real operand
constexpr long kSlackPrecision = 1L << 40;

bool is_odd_prime(long p) {
  if (p < 3) return false;
  mpz_class z = p;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

}  // namespace

LocalFieldPtr LocalField::cyclotomic(long p, long N) {
  if (p < 5 || !is_odd_prime(p))
    raise(ErrorCode::BadPrime, "cyclotomic field needs a prime p >= 5");
  if (N < 1) raise(ErrorCode::InvalidArgument, "precision must be >= 1");
  auto L = std::make_shared<LocalField>();
  L->kind = Kind::Cyclotomic;
  L->p = p;
  L->e = p - 1;
  L->f = 1;
  L->degree = p - 1;
  L->precision = N;
  // ((1+x)^p - 1)/x: coefficient of x^k is binom(p, k+1)
  L->defining.resize(static_cast<size_t>(p));
  for (long k = 0; k < p; ++k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p),
                 static_cast<unsigned long>(k + 1));
    L->defining[static_cast<size_t>(k)] = b;
  }
  return L;
}

LocalFieldPtr LocalField::unramified(long p, long f, long N) {
  if (!is_odd_prime(p)) raise(ErrorCode::BadPrime, "p must be an odd prime");
  if (f < 1) raise(ErrorCode::InvalidArgument, "degree must be >= 1");
  if (N < 1) raise(ErrorCode::InvalidArgument, "precision must be >= 1");
  auto L = std::make_shared<LocalField>();
  L->kind = Kind::Unramified;
  L->p = p;
  L->e = 1;
  L->f = f;
  L->degree = f;
  L->precision = N;
  const auto& modulus = FqField::get(p, f)->modulus;
  L->defining.assign(modulus.begin(), modulus.end());
  return L;
}

LocalFieldElement LocalFieldElement::zero(const LocalFieldPtr& L) {
  return LocalFieldElement(
      L, std::vector<PadicNumber>(static_cast<size_t>(L->degree),
                                  PadicNumber::zero(L->p, L->precision)));
}

LocalFieldElement LocalFieldElement::one(const LocalFieldPtr& L) {
  return from_integer(L, 1);
}

LocalFieldElement LocalFieldElement::from_integer(const LocalFieldPtr& L,
                                                  const mpz_class& n) {
  return from_padic(L, PadicNumber::from_integer(n, L->p, L->precision));
}

LocalFieldElement LocalFieldElement::from_padic(const LocalFieldPtr& L,
                                                const PadicNumber& x) {
  if (x.prime() != L->p) raise(ErrorCode::InvalidArgument, "mixed primes");
  LocalFieldElement out = zero(L);
  out.c_[0] = x;
  return out;
}

LocalFieldElement LocalFieldElement::from_coeffs(const LocalFieldPtr& L,
                                                 std::vector<PadicNumber> c) {
  if (static_cast<long>(c.size()) > L->degree)
    raise(ErrorCode::InvalidArgument, "too many coefficients");
  for (const auto& x : c)
    if (x.prime() != L->p) raise(ErrorCode::InvalidArgument, "mixed primes");
  while (static_cast<long>(c.size()) < L->degree)
    c.push_back(PadicNumber::zero(L->p, L->precision));
  return LocalFieldElement(L, std::move(c));
}

LocalFieldElement LocalFieldElement::generator(const LocalFieldPtr& L) {
  if (L->degree < 2)
    return zero(L);  // Q_p wrapper: x = 0 modulo the defining polynomial x
  LocalFieldElement out = zero(L);
  out.c_[1] = PadicNumber::from_integer(1, L->p, L->precision);
  return out;
}

LocalFieldElement LocalFieldElement::zeta(const LocalFieldPtr& L) {
  if (L->kind != LocalField::Kind::Cyclotomic)
    raise(ErrorCode::InvalidArgument, "zeta_p lives in the cyclotomic field");
  return one(L) + generator(L);
}

bool LocalFieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const PadicNumber& x) { return x.is_zero(); });
}

LocalFieldElement LocalFieldElement::operator-() const {
  std::vector<PadicNumber> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return LocalFieldElement(L_, std::move(c));
}

LocalFieldElement LocalFieldElement::operator+(
    const LocalFieldElement& o) const {
  if (L_->p != o.L_->p || L_->degree != o.L_->degree ||
      L_->kind != o.L_->kind)
    raise(ErrorCode::InvalidArgument, "mixed fields");
  std::vector<PadicNumber> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
  return LocalFieldElement(L_, std::move(c));
}

LocalFieldElement LocalFieldElement::operator-(
    const LocalFieldElement& o) const {
  return *this + (-o);
}

LocalFieldElement LocalFieldElement::operator*(
    const LocalFieldElement& o) const {
  if (L_->p != o.L_->p || L_->degree != o.L_->degree ||
      L_->kind != o.L_->kind)
    raise(ErrorCode::InvalidArgument, "mixed fields");
  long d = L_->degree;
  std::vector<PadicNumber> acc(static_cast<size_t>(2 * d - 1),
                               PadicNumber::zero(L_->p, kSlackPrecision));
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) {
      auto& slot = acc[static_cast<size_t>(i + j)];
      slot = slot + c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
  }
  // reduce modulo the monic defining polynomial
  for (long i = 2 * d - 2; i >= d; --i) {
    PadicNumber top = acc[static_cast<size_t>(i)];
    for (long j = 0; j < d; ++j) {
      auto& slot = acc[static_cast<size_t>(i - d + j)];
      slot = slot - top.scale(L_->defining[static_cast<size_t>(j)]);
    }
  }
  acc.resize(static_cast<size_t>(d));
  return LocalFieldElement(L_, std::move(acc));
}

LocalFieldElement LocalFieldElement::scale(const mpz_class& n) const {
  std::vector<PadicNumber> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].scale(n);
  return LocalFieldElement(L_, std::move(c));
}

LocalFieldElement LocalFieldElement::inverse() const {
  long d = L_->degree;
  // columns of the multiplication-by-*this matrix: (*this) * g^j
  std::vector<std::vector<PadicNumber>> col;
  col.push_back(c_);
  for (long j = 1; j < d; ++j) {
    const auto& prev = col.back();
    std::vector<PadicNumber> next(static_cast<size_t>(d),
                                  PadicNumber::zero(L_->p, kSlackPrecision));
    PadicNumber top = prev[static_cast<size_t>(d - 1)];
    for (long i = 0; i < d - 1; ++i) next[static_cast<size_t>(i + 1)] = prev[static_cast<size_t>(i)];
    next[0] = PadicNumber::zero(L_->p, kSlackPrecision);
    for (long i = 0; i < d; ++i) {
      auto& slot = next[static_cast<size_t>(i)];
      slot = slot - top.scale(L_->defining[static_cast<size_t>(i)]);
    }
    col.push_back(std::move(next));
  }
  // augmented system M y = e_0, Gaussian elimination with the pivot of
  // least valuation (the p-adically largest entry)
  std::vector<std::vector<PadicNumber>> M(static_cast<size_t>(d));
  std::vector<PadicNumber> rhs(static_cast<size_t>(d),
                               PadicNumber::zero(L_->p, kSlackPrecision));
  rhs[0] = PadicNumber::from_integer(1, L_->p, L_->precision);
  for (long i = 0; i < d; ++i) {
    M[static_cast<size_t>(i)].resize(static_cast<size_t>(d));
    for (long j = 0; j < d; ++j)
      M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          col[static_cast<size_t>(j)][static_cast<size_t>(i)];
  }
  for (long k = 0; k < d; ++k) {
    long pivot = -1;
    long best = 0;
    for (long r = k; r < d; ++r) {
      const PadicNumber& cand = M[static_cast<size_t>(r)][static_cast<size_t>(k)];
      if (cand.is_zero()) continue;
      if (pivot < 0 || cand.valuation() < best) {
        pivot = r;
        best = cand.valuation();
      }
    }
    if (pivot < 0)
      raise(ErrorCode::DivisionByZeroAtPrecision,
            "element is not invertible at this precision");
    std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(pivot)]);
    std::swap(rhs[static_cast<size_t>(k)], rhs[static_cast<size_t>(pivot)]);
    for (long r = k + 1; r < d; ++r) {
      const PadicNumber& lead = M[static_cast<size_t>(r)][static_cast<size_t>(k)];
      if (lead.is_zero()) continue;
      PadicNumber factor = lead / M[static_cast<size_t>(k)][static_cast<size_t>(k)];
      for (long j = k; j < d; ++j)
        M[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            M[static_cast<size_t>(r)][static_cast<size_t>(j)] -
            factor * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
      rhs[static_cast<size_t>(r)] =
          rhs[static_cast<size_t>(r)] - factor * rhs[static_cast<size_t>(k)];
    }
  }
  std::vector<PadicNumber> y(static_cast<size_t>(d));
  for (long k = d - 1; k >= 0; --k) {
    PadicNumber s = rhs[static_cast<size_t>(k)];
    for (long j = k + 1; j < d; ++j)
      s = s - M[static_cast<size_t>(k)][static_cast<size_t>(j)] * y[static_cast<size_t>(j)];
    y[static_cast<size_t>(k)] = s / M[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return LocalFieldElement(L_, std::move(y));
}

LocalFieldElement LocalFieldElement::operator/(
    const LocalFieldElement& o) const {
  return *this * o.inverse();
}

LocalFieldElement LocalFieldElement::pow_ui(unsigned long k) const {
  LocalFieldElement acc = one(L_);
  LocalFieldElement base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

ExtValuation LocalFieldElement::valuation() const {
  long wt = L_->kind == LocalField::Kind::Cyclotomic ? 1 : 0;
  bool have_known = false, have_bound = false;
  long known = 0, bound = 0;
  for (long i = 0; i < L_->degree; ++i) {
    const PadicNumber& x = c_[static_cast<size_t>(i)];
    long term;
    if (x.is_zero()) {
      term = L_->e * x.precision() + i * wt;
      if (!have_bound || term < bound) bound = term;
      have_bound = true;
    } else {
      term = L_->e * x.valuation() + i * wt;
      if (!have_known || term < known) known = term;
      have_known = true;
    }
  }
  // Nonzero terms cannot cancel each other: for cyclotomic fields their
  // valuations are distinct mod e, for unramified fields the basis is
  // coefficient-wise.  Hence the min over nonzero terms is exact unless a
  // zero-at-precision slot could hide something smaller.
  if (!have_known) return {bound, false};
  if (have_bound && bound < known) return {bound, false};
  return {known, true};
}

FqElement LocalFieldElement::residue() const {
  ExtValuation v = valuation();
  if (v.value < 0) {
    if (v.exact)
      raise(ErrorCode::InvalidArgument,
            "residue of an element of negative valuation");
    raise(ErrorCode::PrecisionExhausted,
          "valuation bound too weak to certify integrality");
  }
  auto F = FqField::get(L_->p, L_->f);
  if (L_->kind == LocalField::Kind::Cyclotomic)
    return FqElement::from_int(F, c_[0].is_zero() ? 0 : c_[0].residue());
  long idx = 0;
  for (long i = L_->f - 1; i >= 0; --i) {
    const PadicNumber& x = c_[static_cast<size_t>(i)];
    idx = idx * L_->p + (x.is_zero() ? 0 : x.residue());
  }
  return FqElement::from_index(F, idx);
}

std::string LocalFieldElement::str() const {
  std::ostringstream os;
  const char* g = L_->kind == LocalField::Kind::Cyclotomic ? "pi" : "g";
  bool first = true;
  for (long i = 0; i < L_->degree; ++i) {
    const PadicNumber& x = c_[static_cast<size_t>(i)];
    if (x.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x.str() << ")";
    if (i >= 1) {
      os << "*" << g;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

long unit_filtration_level(const LocalFieldElement& u) {
  ExtValuation v = u.valuation();
  if (!v.exact)
    raise(ErrorCode::PrecisionExhausted,
          "cannot certify that u is a unit at this precision");
  if (v.value != 0)
    raise(ErrorCode::NotAOneUnit, "v_L(u) != 0");
  FqElement r = u.residue();
  if (r != FqElement::one(r.field()))
    raise(ErrorCode::NotAOneUnit, "residue of u is not 1");
  LocalFieldElement d = u - LocalFieldElement::one(u.field());
  ExtValuation dv = d.valuation();
  if (!dv.exact)
    raise(ErrorCode::PrecisionExhausted,
          "u = 1 at working precision; level is only bounded below");
  return dv.value;
}

namespace {

LocalFieldElement eval_poly(const std::vector<LocalFieldElement>& f,
                            const LocalFieldElement& x) {
  LocalFieldElement acc = LocalFieldElement::zero(x.field());
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<LocalFieldElement> derive_poly(
    const std::vector<LocalFieldElement>& f) {
  std::vector<LocalFieldElement> d;
  for (size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i].scale(static_cast<long>(i)));
  return d;
}

}  // namespace

LocalFieldElement hensel_root_ext(const std::vector<LocalFieldElement>& f,
                                  const LocalFieldElement& seed) {
  if (f.size() < 2) raise(ErrorCode::InvalidArgument, "constant polynomial");
  std::vector<LocalFieldElement> fp = derive_poly(f);
  LocalFieldElement fs = eval_poly(f, seed);
  LocalFieldElement fps = eval_poly(fp, seed);
  ExtValuation vs = fs.valuation();
  ExtValuation vps = fps.valuation();
  if (!vps.exact)
    raise(ErrorCode::HenselConditionFailed,
          "f'(seed) indistinguishable from zero");
  // vs.value is a lower bound when inexact, which is still sufficient
  if (vs.value <= 2 * vps.value)
    raise(ErrorCode::HenselConditionFailed,
          "v(f(seed)) <= 2 v(f'(seed))");
  if (fs.is_zero()) return seed;

  LocalFieldElement x = seed;
  for (int iter = 0; iter < 200; ++iter) {
    LocalFieldElement fx = eval_poly(f, x);
    if (fx.is_zero()) return x;
    LocalFieldElement fpx = eval_poly(fp, x);
    x = x - fx / fpx;
  }
  raise(ErrorCode::Internal, "Newton iteration failed to settle");
}

}  // namespace padicert
