// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/certify.hpp"

#include <string>
#include <vector>

#include "json.hpp"
#include "padicert/error.hpp"
#include "padicert/finite_field.hpp"
#include "padicert/formal.hpp"
#include "padicert/padic.hpp"
#include "padicert/torsion.hpp"

namespace padicert {

namespace {

long mod_p(const mpz_class& a, long p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r.get_si();
}

LocalFieldElement lift_residue(const LocalFieldPtr& k, const FqElement& r) {
  std::vector<PadicNumber> c;
  c.reserve(static_cast<size_t>(k->f));
  for (long i = 0; i < k->f; ++i)
    c.push_back(PadicNumber::from_integer(r.coeff(i), k->p, k->precision));
  return LocalFieldElement::from_coeffs(k, c);
}

// Integral lift with prescribed residue.  The residue point must have
// y != 0 so that the y-fiber is a simple Hensel root.
Point<LocalFieldElement> lift_affine(const Point<FqElement>& Pbar,
                                     const LocalFieldElement& A,
                                     const LocalFieldElement& B,
                                     const LocalFieldPtr& k) {
  LocalFieldElement x = lift_residue(k, Pbar.x);
  LocalFieldElement rhs = x * x * x + A * x + B;
  LocalFieldElement y = hensel_root_ext(
      {-rhs, LocalFieldElement::zero(k), LocalFieldElement::one(k)},
      lift_residue(k, Pbar.y));
  return {x, y, false};
}

}  // namespace

Decomposition decompose(const Point<LocalFieldElement>& P, const mpz_class& A,
                        const mpz_class& B, const LocalFieldPtr& k) {
  if (k->kind != LocalField::Kind::Unramified)
    raise(ErrorCode::InvalidArgument, "decompose needs an unramified base");
  long p = k->p;
  FqFieldPtr F = FqField::get(p, k->f);
  FqElement AF = FqElement::from_int(F, mod_p(A, p));
  FqElement BF = FqElement::from_int(F, mod_p(B, p));
  PPrimaryStructure st = p_primary_generator(mod_p(A, p), mod_p(B, p), F, p);
  if (st.N0 == 0)
    raise(ErrorCode::InvalidArgument,
          "reduction has trivial p-primary part; nothing to split against");

  if (P.inf) return {0, true, 0};

  LocalFieldElement Ak = LocalFieldElement::from_integer(k, A);
  LocalFieldElement Bk = LocalFieldElement::from_integer(k, B);
  if (!on_curve(P, Ak, Bk))
    raise(ErrorCode::NotOnCurve, "point fails the Weierstrass equation");

  // dlog of the p-primary projection.  cofactor * inv kills the
  // prime-to-p component and is 1 mod p^N0.
  mpz_class pN0 = pow_p(p, st.N0);
  mpz_class m(st.cofactor), u;
  mpz_invert(u.get_mpz_t(), m.get_mpz_t(), pN0.get_mpz_t());
  Point<FqElement> rP = reduce_point(P);
  Point<FqElement> proj = ec_scalar_mul(m * u, rP, AF);
  long c = dlog_p_primary(proj, st.generator, pN0.get_si(), AF);

  Point<LocalFieldElement> P0 = etale_torsion_lift(A, B, k);
  Point<LocalFieldElement> R =
      ec_sub(P, ec_scalar_mul(mpz_class(c), P0, Ak), Ak);

  // Kill the prime-to-p reduction: subtract p times a lift of a p-divisor
  // of r(R).  The divisor always exists with y != 0 because the solution
  // set is a p-torsion coset of size p^min(N0,1) >= 5.
  Point<LocalFieldElement> Phat = R;
  Point<FqElement> rR = reduce_point(R);
  if (!rR.inf) {
    Point<FqElement> sbar;
    bool found = false;
    for (long ix = 0; ix < F->q && !found; ++ix) {
      FqElement x = FqElement::from_index(F, ix);
      FqElement rhs = x * x * x + AF * x + BF;
      for (long iy = 1; iy < F->q && !found; ++iy) {
        FqElement y = FqElement::from_index(F, iy);
        if (y * y != rhs) continue;
        Point<FqElement> cand{x, y, false};
        if (ec_eq(ec_scalar_mul(mpz_class(p), cand, AF), rR)) {
          sbar = cand;
          found = true;
        }
      }
    }
    if (!found)
      raise(ErrorCode::SplitAssumptionViolated,
            "prime-to-p reduction has no affine p-divisor");
    Point<LocalFieldElement> S = lift_affine(sbar, Ak, Bk, k);
    Phat = ec_sub(R, ec_scalar_mul(mpz_class(p), S, Ak), Ak);
    if (!reduce_point(Phat).inf)
      raise(ErrorCode::SplitAssumptionViolated,
            "connected component fails to reduce to O at precision");
  }

  if (Phat.inf) return {c, true, 0};
  FormalPoint<LocalFieldElement> fp = formal_parameter(Phat);
  // On an unramified base [p] shifts the filtration by exactly one step,
  // so [p]Ehat is the level >= 2 part.
  return {c, fp.level >= 2, fp.level};
}

namespace {

struct ChartReading {
  long lambda = 0;
  long xval = 0;
};

// R = P - lambda P0 over Q_7 at precision N; P0 is the etale 7-torsion
// lift, so lambda only matters mod 7.
Point<PadicNumber> etale_shift_difference(const mpz_class& a,
                                          const mpq_class& x,
                                          const mpq_class& y, long lambda,
                                          long N) {
  PadicNumber A7 = PadicNumber::from_integer(0, 7, N);
  Point<PadicNumber> P{embed_rational(x.get_num(), x.get_den(), 7, N),
                       embed_rational(y.get_num(), y.get_den(), 7, N), false};
  LocalFieldPtr k = LocalField::unramified(7, 1, N);
  Point<LocalFieldElement> P0k = etale_torsion_lift(0, a, k);
  Point<PadicNumber> P0{P0k.x.coeff(0), P0k.y.coeff(0), false};
  return ec_sub(P, ec_scalar_mul(mpz_class(lambda), P0, A7), A7);
}

ChartReading certify_attempt(const mpz_class& a, const mpq_class& x,
                             const mpq_class& y, long N) {
  FqFieldPtr F = FqField::get(7, 1);
  PPrimaryStructure st = p_primary_generator(0, mod_p(a, 7), F, 7);
  FqElement AF = FqElement::zero(F);

  PadicNumber A7 = PadicNumber::from_integer(0, 7, N);
  Point<PadicNumber> P{embed_rational(x.get_num(), x.get_den(), 7, N),
                       embed_rational(y.get_num(), y.get_den(), 7, N), false};
  long lambda = dlog_p_primary(reduce_point(P), st.generator, 7, AF);

  Point<PadicNumber> R = etale_shift_difference(a, x, y, lambda, N);
  if (R.inf || R.x.is_zero() || R.y.is_zero())
    raise(ErrorCode::PrecisionExhausted,
          "difference indistinguishable from O at this precision");
  long v = R.x.valuation();
  if (v >= 0 || v % 2 != 0 || 2 * R.y.valuation() != 3 * v)
    raise(ErrorCode::Internal, "residue-matched difference is not formal");
  return {lambda, v};
}

ChartReading escalate(const mpz_class& a, const mpq_class& x,
                      const mpq_class& y, long N, long* used) {
  for (int round = 0;; ++round) {
    try {
      *used = N;
      return certify_attempt(a, x, y, N);
    } catch (const Error& e) {
      bool precision = e.code() == ErrorCode::PrecisionExhausted ||
                       e.code() == ErrorCode::DivisionByZeroAtPrecision;
      if (!precision) throw;
      if (round == 4)
        raise(ErrorCode::PrecisionExhausted,
              "verdict unresolved after four precision doublings");
      N *= 2;
    }
  }
}

}  // namespace

bool mazur_torsion(const mpq_class& x, const mpq_class& y,
                   const mpz_class& a) {
  // The chord-tangent law reads only the x-coefficient, which is 0 for
  // the whole family; a pins the intended curve in the signature.
  (void)a;
  mpq_class Aq(0);
  Point<mpq_class> P{x, y, false};
  Point<mpq_class> acc = P;
  for (int k = 2; k <= 12; ++k) {
    acc = ec_add(acc, P, Aq);
    if (acc.inf) return true;
  }
  return false;
}

GoodPointCertificate certify_good(const mpz_class& n, const mpq_class& x,
                                  const mpq_class& y, long p, long N) {
  if (p != 7)
    raise(ErrorCode::InvalidArgument, "the good-point family is 7-adic");
  if (N < 2) raise(ErrorCode::InvalidArgument, "precision must be >= 2");
  mpz_class a = -2 + 7 * n;
  mpq_class xq = x, yq = y;
  xq.canonicalize();
  yq.canonicalize();

  if (yq * yq != xq * xq * xq + a)
    raise(ErrorCode::NotOnCurve, "y^2 != x^3 + a");
  if (count_points(0, mod_p(a, 7), 7) != 7)
    raise(ErrorCode::WrongResidueClass,
          "reduction must carry exactly 7 points");
  if (mazur_torsion(xq, yq, a))
    raise(ErrorCode::TorsionPoint, "kP = O for some k <= 12");

  long used = 0, used2 = 0;
  ChartReading first = escalate(a, xq, yq, N, &used);
  ChartReading second = escalate(a, xq, yq, 2 * used, &used2);

  GoodPointCertificate cert;
  cert.n = n;
  cert.a = a;
  cert.p = 7;
  cert.x = xq;
  cert.y = yq;
  cert.lambda = first.lambda;
  cert.x_valuation = first.xval;
  cert.good = first.xval == -2;
  cert.precision_used = used;
  cert.stable = second.lambda == first.lambda && second.xval == first.xval;
  return cert;
}

long restrict_level_to_L(const GoodPointCertificate& cert) {
  if (!cert.good)
    raise(ErrorCode::InvalidArgument,
          "level restriction is defined for Good certificates");
  Point<PadicNumber> R = etale_shift_difference(
      cert.a, cert.x, cert.y, cert.lambda, cert.precision_used);
  LocalFieldPtr L = LocalField::cyclotomic(7, cert.precision_used);
  Point<LocalFieldElement> RL{LocalFieldElement::from_padic(L, R.x),
                              LocalFieldElement::from_padic(L, R.y), false};
  long level = formal_parameter(RL).level;
  if (level != cert.p - 1)
    raise(ErrorCode::ConsistencyFailure,
          "restricted level disagrees with p - 1");
  return level;
}

PairingVerdict pairing_nonvanishing(long level_a, long level_b, long p,
                                    long f) {
  if (p < 3 || p % 2 == 0)
    raise(ErrorCode::InvalidArgument, "p must be an odd prime");
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0)
      raise(ErrorCode::InvalidArgument, "p must be an odd prime");
  if (level_a < 1 || level_a > p || level_b < 1 || level_b > p)
    raise(ErrorCode::InvalidArgument, "levels must lie in [1, p]");
  if (f == 1) return {level_a + level_b == p, false};
  if (f == 2) return {false, true};
  raise(ErrorCode::InvalidArgument, "only residue degrees 1 and 2 are known");
}

std::string certificate_json(const GoodPointCertificate& cert) {
  nlohmann::ordered_json j;
  if (cert.n.fits_slong_p())
    j["n"] = cert.n.get_si();
  else
    j["n"] = cert.n.get_str();
  j["p"] = cert.p;
  j["x"] = cert.x.get_str();
  j["y"] = cert.y.get_str();
  j["lambda"] = cert.lambda;
  j["x_valuation"] = cert.x_valuation;
  j["verdict"] = cert.good ? "Good" : "NotGood";
  j["precision_used"] = cert.precision_used;
  j["stability"] = cert.stable;
  return j.dump();
}

}  // namespace padicert
