// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_TORSION_HPP
#define PADICERT_TORSION_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "padicert/curve.hpp"
#include "padicert/error.hpp"
#include "padicert/finite_field.hpp"
#include "padicert/formal.hpp"
#include "padicert/local_field.hpp"
#include "padicert/padic.hpp"

namespace padicert {

// Polynomials over Z[a]: APoly is ascending in a, XPoly ascending in x with
// APoly coefficients.  Normal form everywhere: no trailing zeros, the zero
// polynomial is empty.
using APoly = std::vector<mpz_class>;
using XPoly = std::vector<APoly>;

XPoly xpoly_mul(const XPoly& u, const XPoly& v);

// psi_m for y^2 = x^3 + Ax + B with coefficients in Z[a].  Odd m gives a
// pure x-polynomial whose roots are the x-coordinates of the nonzero
// m-torsion; even m carries one factor of y.
struct DivisionPolynomial {
  XPoly f;
  bool has_y = false;
};

DivisionPolynomial division_polynomial(unsigned long m, const APoly& A,
                                       const APoly& B);

// evaluate every Z[a] coefficient at a concrete parameter value
std::vector<mpz_class> substitute_parameter(const XPoly& f,
                                            const mpz_class& a);

// The two roots of 7 z^2 - 4a z + 16a^2 over Q_7, z running over x^3 on
// the 7-torsion of y^2 = x^3 + a with a = 5 mod 7.  First the unit branch
// theta = 2a(1 + 3 sqrt(-3))/7 with theta = 6 mod 7 (sqrt(-3) = 2 mod 7),
// then theta2 = 2a(1 - 3 sqrt(-3))/7 with v_7(theta2) = -1.
std::pair<PadicNumber, PadicNumber> seventh_torsion_theta(const mpz_class& a,
                                                          long N);

// E[7](Q_7) for y^2 = x^3 + a, a = 5 mod 7.  Returns O first, then the six
// affine points (cbrt(theta) zeta_3^i, +-sqrt(theta + a)) grouped by
// x-coordinate with residues 3, 5, 6 in that order; within a pair the
// y-branch with residue 2 comes first.  All branch seeds are frozen so the
// output is bit-reproducible.
std::vector<Point<PadicNumber>> torsion7_qp(const mpz_class& a,
                                            long N = kDefaultPrecision);

// The unique lift to the unramified field k of the p-primary generator of
// the reduced curve: a point of exact order p^N0 whose reduction is the
// generator chosen by p_primary_generator.  O when N0 = 0.
Point<LocalFieldElement> etale_torsion_lift(const mpz_class& A,
                                            const mpz_class& B,
                                            const LocalFieldPtr& k);

// The order-7 point A_v of the connected part over Q_7(zeta_7): x^3 equals
// the non-unit branch theta2, solved by rescaling with the uniformizer to
// a unit equation and Hensel lifting.  Its filtration level is exactly 1.
FormalPoint<LocalFieldElement> formal_torsion_cyclotomic(
    const mpz_class& a, long p = 7, long N = kDefaultPrecision);

}  // namespace padicert

#endif
