#include "fockmel/specfun.hpp"

#include "fockmel/constants.hpp"

namespace fockmel {

namespace {
long resolve_bits(long bits) { return bits > 0 ? bits : BigReal::default_precision(); }
}

BigReal factorial(long n, long bits) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  BigReal r(0L, resolve_bits(bits));
  mpfr_fac_ui(r.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

BigReal double_factorial(long n, long bits) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
  BigReal r(1L, resolve_bits(bits));
  for (long k = n; k >= 2; k -= 2) r *= k;
  return r;
}

unsigned long long binomial_u64(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (n > 62) throw std::invalid_argument("binomial_u64: n must be <= 62");
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (long i = 1; i <= k; ++i) {
    // Multiply before dividing keeps every intermediate integral.
    r = r * static_cast<unsigned long long>(n - k + i) /
        static_cast<unsigned long long>(i);
  }
  return r;
}

BigReal binomial(long n, long k, long bits) {
  return BigReal(static_cast<long>(binomial_u64(n, k)), resolve_bits(bits));
}

BigReal gamma_half(long half, long bits) {
  long b = resolve_bits(bits);
  if (half % 2 == 0) {
    long m = half / 2;
    if (m <= 0) throw IndexSetError("gamma_half: pole at non-positive integer");
    return factorial(m - 1, b);
  }
  // Walk from Gamma(1/2) = sqrt(pi) to (half)/2 in unit steps.
  const MathConstants& c = constants(b);
  BigReal g = sqrt(c.pi());
  if (half > 1) {
    // Gamma(x+1) = x Gamma(x), x = 1/2, 3/2, ...
    BigReal x(0L, b);
    for (long j = 1; j <= (half - 1) / 2; ++j) {
      mpfr_set_si(x.raw(), 2 * j - 1, MPFR_RNDN);
      x /= 2L;
      g *= x;
    }
  } else if (half < 1) {
    // Gamma(x) = Gamma(x+1)/x, x = -1/2, -3/2, ...
    BigReal x(0L, b);
    for (long j = 0; j < (1 - half) / 2; ++j) {
      mpfr_set_si(x.raw(), half + 2 * j, MPFR_RNDN);
      x /= 2L;
      g /= x;
    }
  }
  return g;
}

BigReal polygamma_int(long n, long m, long bits) {
  if (n < 0 || m < 0) throw std::invalid_argument("polygamma_int: n, m must be >= 0");
  long b = resolve_bits(bits);
  const MathConstants& c = constants(b);
  if (n == 0) {
    BigReal r = -c.euler_gamma();
    for (long k = 1; k <= m; ++k) r += BigReal(1L, b) / k;
    return r;
  }
  BigReal s = c.zeta(n + 1);
  for (long k = 1; k <= m; ++k) s -= pow_si(BigReal(k, b), -(n + 1));
  BigReal r = factorial(n, b) * s;
  if (n % 2 == 0) r = -r;  // (-1)^(n+1)
  return r;
}

BigReal polygamma_half(long n, long q, long bits) {
  if (n < 0) throw std::invalid_argument("polygamma_half: n must be >= 0");
  long b = resolve_bits(bits);
  const MathConstants& c = constants(b);

  // psi^(n)(1/2): n=0 -> -gamma - 2 ln 2; n>=1 -> (2^{n+1}-1) psi^(n)(1).
  BigReal r(0L, b);
  if (n == 0) {
    r = -c.euler_gamma() - ldexp2(c.ln2(), 1);
  } else {
    r = (ldexp2(BigReal(1L, b), n + 1) - 1) * polygamma_int(n, 0, b);
  }

  // Step from 1/2 to 1/2 - q using psi^(n)(x+1) = psi^(n)(x) + (-1)^n n!/x^{n+1}.
  BigReal nfact = factorial(n, b);
  long sign = (n % 2 == 0) ? 1 : -1;
  if (q > 0) {
    for (long j = 1; j <= q; ++j) {
      // down a step: subtract the term at x = 1/2 - j
      BigReal x = BigReal(1L, b) / 2 - j;
      r -= sign * nfact * pow_si(x, -(n + 1));
    }
  } else if (q < 0) {
    for (long j = 0; j < -q; ++j) {
      // up a step: add the term at x = 1/2 + j
      BigReal x = BigReal(1L, b) / 2 + j;
      r += sign * nfact * pow_si(x, -(n + 1));
    }
  }
  return r;
}

BigReal polygamma_pair_diff(long m, long iota, long q, long bits) {
  if (m < 0) throw std::invalid_argument("polygamma_pair_diff: m must be >= 0");
  long b = resolve_bits(bits);
  // Arguments iota/2 + 1 and (iota+3)/2 + q; both must avoid the
  // non-positive-integer poles.
  if (iota % 2 == 0) {
    if (iota / 2 + 1 <= 0)
      throw IndexSetError("polygamma_pair_diff: first argument at a pole");
  } else {
    if ((iota + 3) / 2 + q <= 0)
      throw IndexSetError("polygamma_pair_diff: second argument at a pole");
  }

  long k0, k1, k2;
  if (iota % 2 != 0) {
    k0 = 1;
    k1 = (iota - 1) / 2;  // iota odd, so this division is exact
    k2 = k1 + q;
  } else {
    k0 = -1;
    k1 = iota / 2 + q;
    k2 = iota / 2 - 1;
  }

  BigReal base = polygamma_half(m, 0, b) - polygamma_int(m, 0, b);
  BigReal sum1(0L, b);
  for (long k = 0; k <= k1; ++k)
    sum1 += pow_si(BigReal(2 * k + 1, b), -(m + 1));
  BigReal sum2(0L, b);
  for (long k = 0; k <= k2; ++k)
    sum2 += pow_si(BigReal(k + 1, b), -(m + 1));

  BigReal bracket = ldexp2(sum1, m + 1) - sum2;
  BigReal r = base + ((m % 2 == 0) ? factorial(m, b) * bracket
                                   : -(factorial(m, b) * bracket));
  return (k0 == 1) ? r : -r;
}

BigReal inc_gamma_int(long a, const BigReal& z) {
  if (a < 1) throw std::invalid_argument("inc_gamma_int: a must be >= 1");
  long b = z.prec();
  // (a-1)! e^-z sum_{n=0}^{a-1} z^n / n!
  BigReal term(1L, b);
  BigReal sum(1L, b);
  for (long n = 1; n <= a - 1; ++n) {
    term *= z;
    term /= n;
    sum += term;
  }
  return factorial(a - 1, b) * exp(-z) * sum;
}

std::vector<BigReal> bell_complete(const std::vector<BigReal>& x) {
  size_t n = x.size();
  long b = BigReal::default_precision();
  for (const auto& xi : x) b = std::max(b, xi.prec());
  std::vector<BigReal> y;
  y.reserve(n + 1);
  y.emplace_back(1L, b);
  for (size_t m = 0; m < n; ++m) {
    // Y_{m+1} = sum_{k=0..m} C(m,k) Y_{m-k} x_{k+1}
    BigReal acc(0L, b);
    for (size_t k = 0; k <= m; ++k) {
      acc += binomial(static_cast<long>(m), static_cast<long>(k), b) *
             y[m - k] * x[k];
    }
    y.push_back(std::move(acc));
  }
  return y;
}

BigReal X(long n, long alpha, long bits) {
  if (n < 0) throw std::invalid_argument("X: n must be >= 0");
  if (alpha < 0) throw IndexSetError("X: alpha must be >= 0");
  long b = resolve_bits(bits);
  std::vector<BigReal> psis;
  psis.reserve(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) psis.push_back(polygamma_int(k, alpha, b));
  std::vector<BigReal> y = bell_complete(psis);
  return factorial(alpha, b) * y[static_cast<size_t>(n)];
}

BigReal inc_beta_half(const BigReal& a, const BigReal& b) {
  long prec = std::max(a.prec(), b.prec());
  // B_{1/2}(a,b) = (1/2)^a sum_k (1-b)_k 2^-k / ((a+k) k!)
  BigReal one_minus_b = 1 - b;
  BigReal poch(1L, prec);   // (1-b)_k / k! * 2^-k, built incrementally
  BigReal sum(0L, prec);
  BigReal tol = ldexp2(BigReal(1L, prec), -(prec + 16));
  const long kmax = 8 * prec;  // geometric convergence; generous budget
  bool prev_small = false;
  for (long k = 0;; ++k) {
    BigReal denom = a + k;
    if (denom.is_zero())
      throw IndexSetError("inc_beta_half: a + k vanished; integer a unsupported");
    BigReal term = poch / denom;
    sum += term;
    // Two consecutive negligible terms: the Pochhammer growth phase for
    // large negative 1-b can make a single term spuriously tiny.
    bool small = abs(term) < tol * max(abs(sum), BigReal(1L, prec));
    if (small && prev_small) break;
    prev_small = small;
    if (k >= kmax) throw NumericalError("inc_beta_half: series did not converge");
    poch *= (one_minus_b + k);
    poch /= (2 * (k + 1));
  }
  BigReal half(1L, prec);
  half /= 2;
  return pow(half, a) * sum;
}

}  // namespace fockmel
