// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "padicert/torsion.hpp"

#include <algorithm>
#include <utility>

namespace padicert {

namespace {

APoly atrim(APoly v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

XPoly xtrim(XPoly v) {
  for (auto& c : v) c = atrim(std::move(c));
  while (!v.empty() && v.back().empty()) v.pop_back();
  return v;
}

APoly apoly_add(const APoly& u, const APoly& v) {
  APoly r(std::max(u.size(), v.size()), mpz_class(0));
  for (size_t i = 0; i < u.size(); ++i) r[i] += u[i];
  for (size_t i = 0; i < v.size(); ++i) r[i] += v[i];
  return atrim(std::move(r));
}

APoly apoly_mul(const APoly& u, const APoly& v) {
  if (u.empty() || v.empty()) return {};
  APoly r(u.size() + v.size() - 1, mpz_class(0));
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
  return atrim(std::move(r));
}

APoly apoly_scale(const APoly& u, const mpz_class& c) {
  if (c == 0) return {};
  APoly r = u;
  for (auto& x : r) x *= c;
  return r;
}

XPoly xpoly_sub(const XPoly& u, const XPoly& v) {
  XPoly r(std::max(u.size(), v.size()));
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i];
  for (size_t i = 0; i < v.size(); ++i)
    r[i] = apoly_add(r[i], apoly_scale(v[i], -1));
  return xtrim(std::move(r));
}

XPoly xpoly_sq(const XPoly& u) { return xpoly_mul(u, u); }

XPoly xpoly_halve(XPoly u) {
  for (auto& c : u)
    for (auto& x : c) {
      if (mpz_odd_p(x.get_mpz_t()))
        raise(ErrorCode::Internal, "psi recurrence did not divide by 2");
      x /= 2;
    }
  return u;
}

// Horner evaluation of an integer polynomial over L
LocalFieldElement eval_int_poly(const std::vector<mpz_class>& g,
                                const LocalFieldElement& x) {
  const LocalFieldPtr& L = x.field();
  if (g.empty()) return LocalFieldElement::zero(L);
  LocalFieldElement acc = LocalFieldElement::from_integer(L, g.back());
  for (size_t i = g.size() - 1; i-- > 0;)
    acc = acc * x + LocalFieldElement::from_integer(L, g[i]);
  return acc;
}

std::vector<mpz_class> int_poly_derivative(const std::vector<mpz_class>& g) {
  std::vector<mpz_class> d;
  for (size_t i = 1; i < g.size(); ++i) d.push_back(mpz_class(i) * g[i]);
  return d;
}

// integral lift of a residue-field element along the compatible moduli
LocalFieldElement lift_residue(const LocalFieldPtr& L, const FqElement& c) {
  std::vector<PadicNumber> coeffs;
  for (long i = 0; i < L->f; ++i)
    coeffs.push_back(
        PadicNumber::from_integer(c.coeff(i), L->p, L->precision));
  return LocalFieldElement::from_coeffs(L, std::move(coeffs));
}

// Newton iteration for x^k = u from a simple residue seed; needs p not
// dividing k and v(u) = 0.
PadicNumber unit_root(const PadicNumber& u, unsigned long k, long seed) {
  if (u.is_zero() || u.valuation() != 0)
    raise(ErrorCode::InvalidArgument, "root of a non-unit");
  long p = u.prime();
  PadicNumber x = PadicNumber::from_integer(seed, p, u.precision());
  if ((x.pow_ui(k) - u).is_zero()) return x;
  if ((x.pow_ui(k) - u).valuation() < 1)
    raise(ErrorCode::InvalidArgument, "seed misses the residue");
  for (int pass = 0; pass < 200; ++pass) {
    PadicNumber fx = x.pow_ui(k) - u;
    if (fx.is_zero()) return x;
    x = x - fx / x.pow_ui(k - 1).scale(k);
  }
  raise(ErrorCode::Internal, "unit root iteration failed to converge");
}

}  // namespace

XPoly xpoly_mul(const XPoly& u, const XPoly& v) {
  if (u.empty() || v.empty()) return {};
  XPoly r(u.size() + v.size() - 1);
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      r[i + j] = apoly_add(r[i + j], apoly_mul(u[i], v[j]));
  return xtrim(std::move(r));
}

DivisionPolynomial division_polynomial(unsigned long m, const APoly& A,
                                       const APoly& B) {
  if (m < 1) raise(ErrorCode::InvalidArgument, "psi index must be positive");
  APoly a = atrim(A);
  APoly b = atrim(B);
  // y^2 substituted: C = x^3 + A x + B
  XPoly C = xtrim({b, a, {}, {mpz_class(1)}});
  APoly a2 = apoly_mul(a, a);

  size_t top = std::max<unsigned long>(m, 4);
  std::vector<XPoly> f(top + 1);
  f[0] = {};
  f[1] = {{mpz_class(1)}};
  f[2] = {{mpz_class(2)}};
  f[3] = xtrim({apoly_scale(a2, -1), apoly_scale(b, 12), apoly_scale(a, 6),
                {},
                {mpz_class(3)}});
  f[4] = xtrim(
      {apoly_scale(
           apoly_add(apoly_scale(apoly_mul(b, b), 8), apoly_mul(a2, a)), -4),
       apoly_scale(apoly_mul(a, b), -16), apoly_scale(a2, -20),
       apoly_scale(b, 80), apoly_scale(a, 20),
       {},
       {mpz_class(4)}});

  for (unsigned long n = 5; n <= m; ++n) {
    unsigned long k = n / 2;
    if (n % 2 == 1) {
      // psi_{2k+1} = psi_{k+2} psi_k^3 - psi_{k-1} psi_{k+1}^3, with y^4
      // replaced by C^2 on whichever side holds the even indices
      XPoly t1 = xpoly_mul(f[k + 2], xpoly_mul(xpoly_sq(f[k]), f[k]));
      XPoly t2 = xpoly_mul(f[k - 1], xpoly_mul(xpoly_sq(f[k + 1]), f[k + 1]));
      XPoly C2 = xpoly_sq(C);
      if (k % 2 == 0)
        t1 = xpoly_mul(t1, C2);
      else
        t2 = xpoly_mul(t2, C2);
      f[n] = xpoly_sub(t1, t2);
    } else {
      // psi_{2k} = psi_k (psi_{k+2} psi_{k-1}^2 - psi_{k-2} psi_{k+1}^2)/2y;
      // one factor of y^2 = C cancels against the denominator either way
      XPoly inner = xpoly_sub(xpoly_mul(f[k + 2], xpoly_sq(f[k - 1])),
                              xpoly_mul(f[k - 2], xpoly_sq(f[k + 1])));
      f[n] = xpoly_halve(xpoly_mul(f[k], inner));
    }
  }
  return DivisionPolynomial{f[m], m % 2 == 0};
}

std::vector<mpz_class> substitute_parameter(const XPoly& f,
                                            const mpz_class& a) {
  std::vector<mpz_class> out;
  for (const APoly& c : f) {
    mpz_class v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * a + c[i];
    out.push_back(v);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::pair<PadicNumber, PadicNumber> seventh_torsion_theta(const mpz_class& a,
                                                          long N) {
  if (mpz_fdiv_ui(a.get_mpz_t(), 7) != 5)
    raise(ErrorCode::WrongResidueClass, "family parameter must be 5 mod 7");
  // sqrt(-3) = 2 mod 7 is the branch making 1 + 3 sqrt(-3) divisible by 7
  PadicNumber s = sqrt(PadicNumber::from_integer(-3, 7, N + 2), 2);
  PadicNumber one = PadicNumber::from_integer(1, 7, N + 2);
  PadicNumber seven = PadicNumber::from_integer(7, 7, N + 2);
  PadicNumber theta = (one + s.scale(3)).scale(2 * a) / seven;
  PadicNumber theta2 = (one - s.scale(3)).scale(2 * a) / seven;
  if (theta.residue() != 6 || theta2.valuation() != -1)
    raise(ErrorCode::Internal, "theta branches out of shape");
  return {theta.truncate(N), theta2.truncate(N)};
}

std::vector<Point<PadicNumber>> torsion7_qp(const mpz_class& a, long N) {
  auto [theta, theta2] = seventh_torsion_theta(a, N);
  (void)theta2;
  PadicNumber curve_a = PadicNumber::from_integer(a, 7, N);
  PadicNumber curve_A = PadicNumber::zero(7, N);
  // frozen branches: cbrt(theta) = 3, zeta_3 = 4, y = 2 mod 7
  PadicNumber x0 = unit_root(theta, 3, 3);
  PadicNumber zeta3 = teichmuller(4, 7, N);
  PadicNumber y0 = sqrt(theta + curve_a, 2);

  std::vector<Point<PadicNumber>> out;
  out.push_back(Point<PadicNumber>::infinity());
  PadicNumber xi = x0;
  for (int i = 0; i < 3; ++i) {
    if (i > 0) xi = xi * zeta3;
    out.push_back(Point<PadicNumber>::affine(xi, y0));
    out.push_back(Point<PadicNumber>::affine(xi, -y0));
  }
  for (size_t i = 1; i < out.size(); ++i) {
    if (!on_curve(out[i], curve_A, curve_a))
      raise(ErrorCode::Internal, "torsion point misses the curve");
    if (!ec_scalar_mul(mpz_class(7), out[i], curve_A).inf)
      raise(ErrorCode::Internal, "constructed point is not 7-torsion");
  }
  return out;
}

Point<LocalFieldElement> etale_torsion_lift(const mpz_class& A,
                                            const mpz_class& B,
                                            const LocalFieldPtr& k) {
  if (k->kind != LocalField::Kind::Unramified)
    raise(ErrorCode::InvalidArgument, "etale lift needs an unramified base");
  long p = k->p;
  FqFieldPtr F = FqField::get(p, k->f);
  long Ar = static_cast<long>(mpz_fdiv_ui(A.get_mpz_t(), p));
  long Br = static_cast<long>(mpz_fdiv_ui(B.get_mpz_t(), p));
  PPrimaryStructure st = p_primary_generator(Ar, Br, F, p);
  if (st.N0 == 0) return Point<LocalFieldElement>::infinity();

  mpz_class order = 1;
  for (long i = 0; i < st.N0; ++i) order *= p;

  // The x-coordinate is the unique root of psi_{p^N0} in k over the
  // residue x(P0bar): the other roots above that residue involve the
  // connected part and live in ramified extensions.  The division
  // polynomial degenerates mod p (every slot of the etale kernel collapses
  // to a multiple root), so instead of a simple-root Newton jump the root
  // is grown digit by digit, with the valuation ramp of psi checked at
  // every step.
  long N = k->precision;
  LocalFieldPtr ki = LocalField::unramified(p, k->f, N + 4);
  DivisionPolynomial psi =
      division_polynomial(mpz_get_ui(order.get_mpz_t()), {A}, {B});
  std::vector<mpz_class> g = substitute_parameter(psi.f, 0);
  std::vector<mpz_class> gp = int_poly_derivative(g);

  LocalFieldElement x = lift_residue(ki, st.generator.x);
  ExtValuation vS = eval_int_poly(gp, x).valuation();
  if (!vS.exact)
    raise(ErrorCode::NotSimpleRoot, "psi' vanishes too deep at the seed");
  const long S = vS.value;
  mpz_class pj = p;  // p^{j+1}
  for (long j = 0; j + 1 < N; ++j) {
    LocalFieldElement fx = eval_int_poly(g, x);
    ExtValuation vf = fx.valuation();
    if (vf.value < S + j + 1)
      raise(ErrorCode::NotSimpleRoot, "valuation ramp broke during the lift");
    LocalFieldElement fpx = eval_int_poly(gp, x);
    ExtValuation vfp = fpx.valuation();
    if (!vfp.exact || vfp.value != S)
      raise(ErrorCode::NotSimpleRoot, "psi' drifted during the lift");
    FqElement d = (-(fx / fpx.scale(pj))).residue();
    if (!d.is_zero()) x = x + lift_residue(ki, d).scale(pj);
    pj *= p;
  }
  {
    ExtValuation vf = eval_int_poly(g, x).valuation();
    if (vf.value < S + N)
      raise(ErrorCode::NotSimpleRoot, "lifted root fails to kill psi");
  }

  // re-express at the caller's precision and recover y as a square root
  std::vector<PadicNumber> cx;
  for (long i = 0; i < k->degree; ++i) cx.push_back(x.coeff(i).truncate(N));
  LocalFieldElement xk = LocalFieldElement::from_coeffs(k, std::move(cx));
  LocalFieldElement Ak = LocalFieldElement::from_integer(k, A);
  LocalFieldElement Bk = LocalFieldElement::from_integer(k, B);
  LocalFieldElement rhs = (xk * xk + Ak) * xk + Bk;
  LocalFieldElement y = hensel_root_ext(
      {-rhs, LocalFieldElement::zero(k), LocalFieldElement::one(k)},
      lift_residue(k, st.generator.y));
  Point<LocalFieldElement> P = Point<LocalFieldElement>::affine(xk, y);

  Point<FqElement> red = reduce_point(P);
  if (red.inf || red.x != st.generator.x || red.y != st.generator.y)
    raise(ErrorCode::Internal, "lift does not reduce to the generator");
  if (!ec_scalar_mul(order, P, Ak).inf)
    raise(ErrorCode::Internal, "lift is not killed by p^N0");
  if (st.N0 > 0 && ec_scalar_mul(order / p, P, Ak).inf)
    raise(ErrorCode::Internal, "lift has order below p^N0");
  return P;
}

FormalPoint<LocalFieldElement> formal_torsion_cyclotomic(const mpz_class& a,
                                                         long p, long N) {
  if (p != 7)
    raise(ErrorCode::InvalidArgument,
          "only the 7-power cyclotomic branch is implemented");
  auto [theta, theta2] = seventh_torsion_theta(a, N + 2);
  (void)theta;
  LocalFieldPtr L = LocalField::cyclotomic(7, N);
  LocalFieldElement one = LocalFieldElement::one(L);
  LocalFieldElement zero = LocalFieldElement::zero(L);
  LocalFieldElement pi = LocalFieldElement::generator(L);
  LocalFieldElement pi6 = pi.pow_ui(6);
  LocalFieldElement th2 = LocalFieldElement::from_padic(L, theta2);

  // v_L(theta2) = -6, so x = u/pi^2 and y = w/pi^3 turn the coordinate
  // equations into unit equations amenable to Hensel
  LocalFieldElement tau = pi6 * th2;
  ExtValuation vt = tau.valuation();
  if (!vt.exact || vt.value != 0)
    raise(ErrorCode::Internal, "rescaled branch is not a unit");
  long rc = tau.residue().coeff(0);
  long cube_seed = 0;
  for (long c = 1; c < 7 && cube_seed == 0; ++c)
    if (c * c * c % 7 == rc) cube_seed = c;
  if (cube_seed == 0)
    raise(ErrorCode::HenselConditionFailed, "residue has no cube root");
  LocalFieldElement u = hensel_root_ext(
      {-tau, zero, zero, one}, LocalFieldElement::from_integer(L, cube_seed));
  LocalFieldElement x = u / pi.pow_ui(2);

  LocalFieldElement sig = pi6 * (th2 + LocalFieldElement::from_integer(L, a));
  long rs = sig.residue().coeff(0);
  long sq_seed = 0;
  for (long c = 1; c < 7 && sq_seed == 0; ++c)
    if (c * c % 7 == rs) sq_seed = c;
  if (sq_seed == 0)
    raise(ErrorCode::HenselConditionFailed, "residue has no square root");
  LocalFieldElement w = hensel_root_ext(
      {-sig, zero, one}, LocalFieldElement::from_integer(L, sq_seed));
  LocalFieldElement y = w / pi.pow_ui(3);

  Point<LocalFieldElement> P = Point<LocalFieldElement>::affine(x, y);
  if (!on_curve(P, zero, LocalFieldElement::from_integer(L, a)))
    raise(ErrorCode::Internal, "connected branch point misses the curve");
  if (!ec_scalar_mul(mpz_class(7), P, zero).inf)
    raise(ErrorCode::Internal, "connected branch point is not 7-torsion");
  FormalPoint<LocalFieldElement> fp = formal_parameter(P);
  if (fp.level != 1)
    raise(ErrorCode::Internal, "connected branch must enter at level 1");
  return fp;
}

}  // namespace padicert
