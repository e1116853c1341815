// Copyright (c) 2026 The padicert authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef PADICERT_CERTIFY_HPP
#define PADICERT_CERTIFY_HPP

#include <gmpxx.h>

#include <string>

#include "padicert/curve.hpp"
#include "padicert/local_field.hpp"

namespace padicert {

// Splitting of P in E(k), k unramified over Q_p with ordinary reduction,
// against the connected-etale sequence: after subtracting c copies of the
// etale torsion lift P0 and a p-divisor of the remaining prime-to-p
// reduction, what is left (Phat) lies in the formal group.
struct Decomposition {
  long c = 0;            // dlog of the p-primary reduction against r(P0)
  bool trivial = false;  // Phat lies in [p]Ehat at working precision
  long level = 0;        // filtration level of Phat; 0 when Phat = O
};

// Requires an unramified k and a nontrivial p-primary reduction group.
// Class-preserving: decompose(P + pQ) agrees in c, triviality, and, when
// nontrivial, in level.  Raises SplitAssumptionViolated when the
// prime-to-p reduction cannot be matched at precision.
Decomposition decompose(const Point<LocalFieldElement>& P, const mpz_class& A,
                        const mpz_class& B, const LocalFieldPtr& k);

// Verdict for one rational point on E_n : y^2 = x^3 + a, a = -2 + 7n.
// The reduction has exactly 7 points, so lambda is the full discrete log
// of r(P) and R = P - lambda P0 lands in the formal group; the verdict
// reads off v_7(x(R)), which is -2 exactly when R generates modulo [7].
struct GoodPointCertificate {
  mpz_class n;
  mpz_class a;
  long p = 7;
  mpq_class x, y;        // the input point, exact
  long lambda = 0;       // in [0, 7)
  long x_valuation = 0;  // v_7(x(R)); always even and <= -2
  bool good = false;     // x_valuation == -2
  long precision_used = 0;
  bool stable = false;   // same lambda and valuation at doubled precision
};

// Mazur screen on y^2 = x^3 + a: true when kP = O for some k <= 12, the
// bound on the order of a rational torsion point.  Exact arithmetic.
bool mazur_torsion(const mpq_class& x, const mpq_class& y,
                   const mpz_class& a);

// Starts at precision N and doubles up to four times when the difference
// degenerates at precision.  Raises NotOnCurve / TorsionPoint on bad
// input and PrecisionExhausted when the escalation cap is reached.
GoodPointCertificate certify_good(const mpz_class& n, const mpq_class& x,
                                  const mpq_class& y, long p = 7,
                                  long N = kDefaultPrecision);

// Filtration level of R = P - lambda P0 over Q_p(zeta_p).  Requires a
// Good certificate; the answer must be p - 1, anything else raises
// ConsistencyFailure.
long restrict_level_to_L(const GoodPointCertificate& cert);

// Level calculus for the local pairing over the degree-f unramified
// layer: the pairing of filtration levels (level_a, level_b) survives
// iff level_a + level_b = p and f = 1.  For f = 2 the calculus is
// silent, reported as indeterminate (and not nonvanishing).
struct PairingVerdict {
  bool nonvanishing = false;
  bool indeterminate = false;
};

PairingVerdict pairing_nonvanishing(long level_a, long level_b, long p,
                                    long f);

// One JSON object, fixed key order, rationals as canonical "num/den".
std::string certificate_json(const GoodPointCertificate& cert);

}  // namespace padicert

#endif
