#pragma once

#include "fockmel/bigreal.hpp"

#include <functional>
#include <vector>

namespace fockmel {

/// Gauss-Legendre rule mapped to [0,1]; exact for polynomials of
/// degree <= 2n-1, spectrally accurate for analytic integrands.
struct GLRule {
  std::vector<BigReal> x;  // nodes, ascending, strictly inside (0,1)
  std::vector<BigReal> w;  // weights, sum to 1
};

/// Cached rule of order n at the given precision. Nodes are found by
/// Newton iteration on the Legendre recurrence from double-precision
/// Chebyshev estimates; the cache keeps one immutable rule per (n, bits).
const GLRule& gl_rule(long n, long bits = 0);

using Fn1 = std::function<BigReal(const BigReal&)>;
using Fn3 = std::function<BigReal(const BigReal&, const BigReal&, const BigReal&)>;

/// Integral of f over [a, b] with one application of the rule.
BigReal gl_integrate(const Fn1& f, const BigReal& a, const BigReal& b,
                     const GLRule& rule);

/// Tanh-sinh (double-exponential) quadrature of f over (0,1).
/// Handles integrable endpoint singularities (powers, log powers).
/// Levels are doubled until two successive refinements agree to the
/// target precision; exceeding max_level raises NumericalError.
BigReal tanh_sinh_01(const Fn1& f, long bits = 0, long max_level = 12);

/// Integral with value and error estimate.
struct QuadResult {
  BigReal value;
  BigReal abs_error;
  long evals = 0;
};

/// Tuning knobs for integrate_wedge.
struct WedgeOptions {
  long inner_order = 24;   // fixed GL order for the two inner directions
  long outer_hi = 24;      // embedded outer pair: high order
  long outer_lo = 12;      //                      low order
  long alpha_hint = 0;     // outer integrand behaves like s^alpha near 0
  long max_outer_x = 512;  // cap for the log-substituted left panel sweep
  long max_outer_s = 2048; // cap for the exponential right panel sweep
  long budget = 200000000; // max integrand evaluations before giving up
};

/// Adaptive nested quadrature of W over the open wedge 0<t<u<s<inf:
///   integral ds du dt W(s,t,u)
/// for W smooth inside the wedge, exponentially damped for large s and
/// power-by-log-power behaved as s->0.
///
/// Outer (s) direction: the slice integral over s in (0,1] is computed
/// under the substitution s = e^-x (turning endpoint log singularities
/// analytic) and over [1, S_max] on doubling panels; each panel carries
/// an embedded high/low order error estimate. Panels stop once two
/// consecutive contributions fall below the requested tolerance times
/// the running total; the neglected tail of the damped integrand is
/// covered by the same threshold. Inner (u, t) directions use a fixed
/// rule whose error for this family of integrands decays like
/// (1+sqrt2)^(-2*order), far below the outer estimate.
///
/// Fails with NumericalError if the evaluation budget is exhausted or
/// the error estimate cannot reach rel_tol * |value|.
QuadResult integrate_wedge(const Fn3& W, const BigReal& rel_tol,
                           long bits = 0, const WedgeOptions& opt = {});

}  // namespace fockmel
