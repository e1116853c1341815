// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace padicert {

namespace {

bool is_odd_prime(long p) {
  if (p < 3) return false;
  mpz_class z = p;
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

long mod_p(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

// Remainder of a by the monic divisor d, coefficients mod p, ascending.
std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& d,
                           long p) {
  long dd = static_cast<long>(d.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= dd; --i) {
    long c = a[static_cast<size_t>(i)];
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) {
      auto& slot = a[static_cast<size_t>(i - dd + j)];
      slot = mod_p(slot - c * d[static_cast<size_t>(j)], p);
    }
  }
  a.resize(static_cast<size_t>(dd));
  return a;
}

bool poly_is_zero(const std::vector<long>& a) {
  return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

// Monic polynomial of degree deg whose lower coefficients are the base-p
// digits of idx.
std::vector<long> monic_from_index(long idx, long deg, long p) {
  std::vector<long> c(static_cast<size_t>(deg) + 1, 0);
  for (long i = 0; i < deg; ++i) {
    c[static_cast<size_t>(i)] = idx % p;
    idx /= p;
  }
  c[static_cast<size_t>(deg)] = 1;
  return c;
}

// Trial division by every monic polynomial of degree <= deg/2; the fields
// here are tiny, so the quadratic search is the clearest correct choice.
bool is_irreducible(const std::vector<long>& g, long p) {
  long deg = static_cast<long>(g.size()) - 1;
  for (long d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      if (poly_is_zero(poly_rem(g, monic_from_index(idx, d, p), p)))
        return false;
    }
  }
  return true;
}

std::map<std::pair<long, long>, FqFieldPtr>& field_cache() {
  static std::map<std::pair<long, long>, FqFieldPtr> cache;
  return cache;
}
std::mutex field_cache_mutex;

}  // namespace

FqFieldPtr FqField::get(long p, long f) {
  if (!is_odd_prime(p)) raise(ErrorCode::BadPrime, "p must be an odd prime");
  if (f < 1) raise(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::lock_guard<std::mutex> lock(field_cache_mutex);
  auto& cache = field_cache();
  auto it = cache.find({p, f});
  if (it != cache.end()) return it->second;

  auto F = std::make_shared<FqField>();
  F->p = p;
  F->f = f;
  F->q = 1;
  for (long i = 0; i < f; ++i) {
    if (F->q > (1L << 40) / p)
      raise(ErrorCode::InvalidArgument, "field too large to enumerate");
    F->q *= p;
  }
  if (f == 1) {
    F->modulus = {0, 1};
  } else {
    for (long idx = 0;; ++idx) {
      if (idx >= F->q) raise(ErrorCode::Internal, "no irreducible found");
      auto g = monic_from_index(idx, f, p);
      if (is_irreducible(g, p)) {
        F->modulus = g;
        break;
      }
    }
  }
  FqFieldPtr out = F;
  cache[{p, f}] = out;
  return out;
}

FqElement FqElement::zero(const FqFieldPtr& F) {
  return FqElement(F, std::vector<long>(static_cast<size_t>(F->f), 0));
}

FqElement FqElement::one(const FqFieldPtr& F) { return from_int(F, 1); }

FqElement FqElement::from_int(const FqFieldPtr& F, long n) {
  std::vector<long> c(static_cast<size_t>(F->f), 0);
  c[0] = mod_p(n, F->p);
  return FqElement(F, std::move(c));
}

FqElement FqElement::from_index(const FqFieldPtr& F, long idx) {
  if (idx < 0 || idx >= F->q)
    raise(ErrorCode::InvalidArgument, "element index out of range");
  std::vector<long> c(static_cast<size_t>(F->f), 0);
  for (long i = 0; i < F->f; ++i) {
    c[static_cast<size_t>(i)] = idx % F->p;
    idx /= F->p;
  }
  return FqElement(F, std::move(c));
}

long FqElement::index() const {
  long idx = 0;
  for (long i = F_->f - 1; i >= 0; --i) idx = idx * F_->p + c_[static_cast<size_t>(i)];
  return idx;
}

bool FqElement::is_zero() const { return poly_is_zero(c_); }

FqElement FqElement::operator-() const {
  std::vector<long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = mod_p(-c_[i], F_->p);
  return FqElement(F_, std::move(c));
}

FqElement FqElement::operator+(const FqElement& o) const {
  if (F_->p != o.F_->p || F_->f != o.F_->f)
    raise(ErrorCode::InvalidArgument, "mixed fields");
  std::vector<long> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = mod_p(c_[i] + o.c_[i], F_->p);
  return FqElement(F_, std::move(c));
}

FqElement FqElement::operator-(const FqElement& o) const {
  return *this + (-o);
}

FqElement FqElement::operator*(const FqElement& o) const {
  if (F_->p != o.F_->p || F_->f != o.F_->f)
    raise(ErrorCode::InvalidArgument, "mixed fields");
  std::vector<long> prod(2 * c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      prod[i + j] = mod_p(prod[i + j] + c_[i] * o.c_[j], F_->p);
  }
  return FqElement(F_, poly_rem(std::move(prod), F_->modulus, F_->p));
}

FqElement FqElement::operator/(const FqElement& o) const {
  return *this * o.inverse();
}

bool FqElement::operator==(const FqElement& o) const {
  return F_->p == o.F_->p && F_->f == o.F_->f && c_ == o.c_;
}

FqElement FqElement::pow(unsigned long e) const {
  FqElement acc = one(F_);
  FqElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FqElement FqElement::inverse() const {
  if (is_zero()) raise(ErrorCode::InvalidArgument, "inverse of zero in F_q");
  return pow(static_cast<unsigned long>(F_->q - 2));
}

FqElement FqElement::frobenius() const {
  return pow(static_cast<unsigned long>(F_->p));
}

std::string FqElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << "*";
      os << "t";
      if (i != 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

std::pair<long, long> prime_power_split(long q) {
  if (q < 3) raise(ErrorCode::BadPrime, "q must be an odd prime power");
  long p = 0;
  for (long d = 3; d * d <= q; d += 2) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself prime
  if (!is_odd_prime(p)) raise(ErrorCode::BadPrime, "q must be an odd prime power");
  long f = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1) raise(ErrorCode::BadPrime, "q must be an odd prime power");
  return {p, f};
}

void check_nonsingular(const FqElement& A, const FqElement& B) {
  const auto& F = A.field();
  FqElement disc = FqElement::from_int(F, 4) * A * A * A +
                   FqElement::from_int(F, 27) * B * B;
  if (disc.is_zero())
    raise(ErrorCode::SingularCurve, "4A^3 + 27B^2 = 0 in F_q");
}

// One square root of each square in F_q, indexed by value; -1 for
// non-squares.  Shared by counting and random point picking.
std::vector<long> sqrt_table(const FqFieldPtr& F) {
  std::vector<long> root(static_cast<size_t>(F->q), -1);
  for (long iy = 0; iy < F->q; ++iy) {
    FqElement y = FqElement::from_index(F, iy);
    long v = (y * y).index();
    if (root[static_cast<size_t>(v)] == -1) root[static_cast<size_t>(v)] = iy;
  }
  return root;
}

}  // namespace

long count_points_field(const FqElement& A, const FqElement& B) {
  check_nonsingular(A, B);
  const auto& F = A.field();
  std::vector<long> nroots(static_cast<size_t>(F->q), 0);
  for (long iy = 0; iy < F->q; ++iy) {
    FqElement y = FqElement::from_index(F, iy);
    nroots[static_cast<size_t>((y * y).index())]++;
  }
  long n = 1;
  for (long ix = 0; ix < F->q; ++ix) {
    FqElement x = FqElement::from_index(F, ix);
    FqElement rhs = (x * x + A) * x + B;
    n += nroots[static_cast<size_t>(rhs.index())];
  }
  return n;
}

long count_points(long A, long B, long q) {
  auto [p, f] = prime_power_split(q);
  FqFieldPtr F = FqField::get(p, f);
  return count_points_field(FqElement::from_int(F, A),
                            FqElement::from_int(F, B));
}

int legendre(const mpz_class& a, long p) {
  if (!is_odd_prime(p)) raise(ErrorCode::BadPrime, "p must be an odd prime");
  mpz_class pz = p;
  return mpz_legendre(a.get_mpz_t(), pz.get_mpz_t());
}

long trace_of_frobenius(long A, long B, long q) {
  long n = count_points(A, B, q);
  long a = q + 1 - n;
  if (a * a > 4 * q)
    raise(ErrorCode::HasseViolation, "|a_q| exceeds 2*sqrt(q)");
  return a;
}

PPrimaryStructure p_primary_generator(long A, long B, const FqFieldPtr& F,
                                      long p) {
  FqElement Af = FqElement::from_int(F, A);
  FqElement Bf = FqElement::from_int(F, B);
  long n = count_points_field(Af, Bf);
  long aq = F->q + 1 - n;
  if (mod_p(aq, p) == 0)
    raise(ErrorCode::NotOrdinary, "p divides a_q (supersingular reduction)");

  PPrimaryStructure out;
  out.group_order = n;
  out.prng_seed = 0x9e3779b9UL;
  long pN = 1;
  while (n % (pN * p) == 0) {
    pN *= p;
    out.N0 += 1;
  }
  out.cofactor = n / pN;
  if (out.N0 == 0) {
    out.generator = Point<FqElement>::infinity();
    return out;
  }

  std::vector<long> root = sqrt_table(F);
  std::mt19937_64 rng(out.prng_seed);
  std::uniform_int_distribution<long> pick(0, F->q - 1);
  for (int attempt = 0; attempt < 4000; ++attempt) {
    FqElement x = FqElement::from_index(F, pick(rng));
    FqElement rhs = (x * x + Af) * x + Bf;
    long ry = root[static_cast<size_t>(rhs.index())];
    if (ry < 0) continue;
    FqElement y = FqElement::from_index(F, ry);
    if ((rng() & 1) != 0) y = -y;
    Point<FqElement> P = Point<FqElement>::affine(x, y);
    Point<FqElement> Q = ec_scalar_mul(out.cofactor, P, Af);
    // order of Q is p^j for some j <= N0; we need j = N0 exactly
    long j = 0;
    Point<FqElement> R = Q;
    while (!R.inf && j <= out.N0) {
      R = ec_scalar_mul(p, R, Af);
      ++j;
    }
    if (!R.inf) raise(ErrorCode::Internal, "p-primary part larger than v_p(n)");
    if (j == out.N0) {
      out.generator = Q;
      return out;
    }
  }
  raise(ErrorCode::Internal, "generator search exhausted its draw budget");
}

long dlog_p_primary(const Point<FqElement>& Q, const Point<FqElement>& G,
                    long order, const FqElement& A) {
  Point<FqElement> acc = Point<FqElement>::infinity();
  for (long c = 0; c < order; ++c) {
    if (ec_eq(acc, Q)) return c;
    acc = ec_add(acc, G, A);
  }
  raise(ErrorCode::NotInSubgroup, "point is not a multiple of the generator");
}

}  // namespace padicert
