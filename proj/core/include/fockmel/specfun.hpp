#pragma once

#include "fockmel/bigreal.hpp"

#include <vector>

namespace fockmel {

/// n! at the given precision (exact while it fits the mantissa).
BigReal factorial(long n, long bits = 0);

/// n!! for n >= -1; (-1)!! = 0!! = 1.
BigReal double_factorial(long n, long bits = 0);

/// Exact binomial coefficient; requires 0 <= k <= n <= 62.
unsigned long long binomial_u64(long n, long k);

/// C(n, k) as a BigReal (0 outside 0 <= k <= n).
BigReal binomial(long n, long k, long bits = 0);

/// Gamma(half/2) for an integer `half`: integer and half-integer
/// arguments, including negative half-integers. Non-positive even
/// `half` hits a pole and is rejected.
BigReal gamma_half(long half, long bits = 0);

/// psi^(n)(m+1) for integers n >= 0, m >= 0.
///   n = 0:  -euler_gamma + H_m
///   n >= 1: (-1)^(n+1) n! (zeta(n+1) - sum_{k=1..m} k^-(n+1))
BigReal polygamma_int(long n, long m, long bits = 0);

/// psi^(n)(1/2 - q) for integer q of either sign (q < 0 reaches the
/// positive half-integers 1/2 + |q| by upward recurrence).
BigReal polygamma_half(long n, long q, long bits = 0);

/// psi^(m)(iota/2 + 1) - psi^(m)((iota+3)/2 + q) folded into a single
/// finite sum around the quarter-shift between the two arguments.
/// Valid when neither argument is a non-positive integer.
BigReal polygamma_pair_diff(long m, long iota, long q, long bits = 0);

/// Upper incomplete gamma at positive integer order:
///   Gamma(a, z) = (a-1)! e^-z sum_{n=0..a-1} z^n / n!,  any real z.
BigReal inc_gamma_int(long a, const BigReal& z);

/// Complete Bell polynomials Y_0..Y_n for arguments x_1..x_n.
/// Y_{n+1} = sum_k C(n,k) Y_{n-k} x_{k+1}, Y_0 = 1.
std::vector<BigReal> bell_complete(const std::vector<BigReal>& x);

/// X_n(alpha) = integral over [0, inf) of e^-s s^alpha (ln s)^n ds,
/// in closed form alpha! * Y_n(psi(alpha+1), ..., psi^(n-1)(alpha+1)).
/// alpha < 0 is rejected.
BigReal X(long n, long alpha, long bits = 0);

/// Lower incomplete beta at z = 1/2 by the hypergeometric series
///   B_z(a,b) = z^a sum_k (1-b)_k z^k / ((a+k) k!),
/// for half-integer a (so a + k never vanishes).
BigReal inc_beta_half(const BigReal& a, const BigReal& b);

}  // namespace fockmel
