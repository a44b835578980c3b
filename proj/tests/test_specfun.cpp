#include <doctest.h>

#include "fockmel/constants.hpp"
#include "fockmel/quadrature.hpp"
#include "fockmel/specfun.hpp"

#include <random>

using namespace fockmel;

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1L);
  CHECK(factorial(5) == 120L);
  CHECK(double_factorial(-1) == 1L);
  CHECK(double_factorial(0) == 1L);
  CHECK(double_factorial(7) == 105L);
  CHECK(double_factorial(8) == 384L);
  CHECK(binomial_u64(10, 3) == 120ULL);
  CHECK(binomial_u64(62, 31) == 916312070471295267ULL);
  CHECK(binomial_u64(4, 7) == 0ULL);
  CHECK(binomial(6, 2) == 15L);
}

TEST_CASE("gamma at integer and half-integer arguments") {
  const MathConstants& c = constants();
  BigReal sp = sqrt(c.pi());
  CHECK(gamma_half(4) == 1L);            // Gamma(2)
  CHECK(gamma_half(8) == 6L);            // Gamma(4)
  CHECK(ulp_close(gamma_half(1), sp, 4));            // Gamma(1/2)
  CHECK(ulp_close(gamma_half(3), sp / 2L, 4));       // Gamma(3/2)
  CHECK(ulp_close(gamma_half(5), 3 * sp / 4L, 4));   // Gamma(5/2)
  CHECK(ulp_close(gamma_half(-1), -2 * sp, 4));      // Gamma(-1/2)
  CHECK(ulp_close(gamma_half(-3), 4 * sp / 3L, 4));  // Gamma(-3/2)
  CHECK_THROWS_AS(gamma_half(0), IndexSetError);
  CHECK_THROWS_AS(gamma_half(-2), IndexSetError);
}

TEST_CASE("polygamma at integer arguments") {
  const MathConstants& c = constants();
  CHECK(ulp_close(polygamma_int(0, 0), -c.euler_gamma(), 4));
  CHECK(ulp_close(polygamma_int(1, 0), c.pi() * c.pi() / 6L, 4));
  CHECK(ulp_close(polygamma_int(0, 2), BigReal(3L) / 2L - c.euler_gamma(), 4));
  // recurrence: psi^(n)(m+1) - psi^(n)(m) = (-1)^n n! / m^(n+1)
  for (long n = 0; n <= 4; ++n) {
    for (long m = 1; m <= 6; ++m) {
      BigReal lhs = polygamma_int(n, m) - polygamma_int(n, m - 1);
      BigReal rhs = factorial(n) * pow_si(BigReal(m), -(n + 1));
      if (n % 2 != 0) rhs = -rhs;
      CHECK(ulp_close(lhs, rhs, 4));
    }
  }
}

TEST_CASE("polygamma at half-integer arguments") {
  const MathConstants& c = constants();
  BigReal two_ln2 = ldexp2(c.ln2(), 1);
  CHECK(ulp_close(polygamma_half(0, 0), -c.euler_gamma() - two_ln2, 4));
  CHECK(ulp_close(polygamma_half(1, 0), c.pi() * c.pi() / 2L, 4));
  CHECK(ulp_close(polygamma_half(0, 1), 2 - c.euler_gamma() - two_ln2, 4));
  // positive half-integers by upward recurrence: psi(3/2) = psi(1/2) + 2
  CHECK(ulp_close(polygamma_half(0, -1), polygamma_half(0, 0) + 2L, 4));
  // psi'(3/2) = psi'(1/2) - 4
  CHECK(ulp_close(polygamma_half(1, -1), polygamma_half(1, 0) - 4L, 4));
  // cross-check against mpfr digamma at a few arguments
  for (long q = -3; q <= 3; ++q) {
    BigReal x = BigReal(1L) / 2L - q;
    BigReal ref(0L, 256);
    mpfr_digamma(ref.raw(), x.raw(), MPFR_RNDN);
    CHECK(ulp_close(polygamma_half(0, q), ref, 8));
  }
}

TEST_CASE("folded polygamma difference equals the direct difference") {
  for (long iota = -3; iota <= 2; ++iota) {
    for (long q = 0; q <= 3; ++q) {
      if (iota % 2 == 0 && iota / 2 + 1 <= 0) continue;
      if (iota % 2 != 0 && (iota + 3) / 2 + q <= 0) continue;
      for (long m = 0; m <= 3; ++m) {
        BigReal direct(0L);
        if (iota % 2 == 0) {
          // iota/2+1 integer, (iota+3)/2+q half-integer
          direct = polygamma_int(m, iota / 2, 256) -
                   polygamma_half(m, -(q + (iota + 1) / 2) - 1, 256);
        } else {
          // iota/2+1 half-integer = 1/2 - (-(iota+1)/2)
          direct = polygamma_half(m, -(iota + 1) / 2, 256) -
                   polygamma_int(m, (iota + 3) / 2 + q - 1, 256);
        }
        BigReal folded = polygamma_pair_diff(m, iota, q, 256);
        CHECK_MESSAGE(ulp_close(folded, direct, 8),
                      "iota=", iota, " q=", q, " m=", m);
      }
    }
  }
}

TEST_CASE("incomplete gamma at integer order") {
  BigReal z = constants().ln2();
  CHECK(ulp_close(inc_gamma_int(1, BigReal(1L)), exp(BigReal(-1L)), 4));
  CHECK(ulp_close(inc_gamma_int(3, BigReal(0L)), BigReal(2L), 4));
  CHECK(ulp_close(inc_gamma_int(2, z), (1 + z) / 2L, 4));
  // negative z is legal: Gamma(2, -1) = e * 0 ... use mpfr as oracle
  for (long a = 1; a <= 5; ++a) {
    for (double zd : {-1.5, -0.25, 0.75, 2.0, 10.0}) {
      BigReal zz(zd);
      BigReal ref(0L, 256);
      BigReal aa(a);
      mpfr_gamma_inc(ref.raw(), aa.raw(), zz.raw(), MPFR_RNDN);
      CHECK(ulp_close(inc_gamma_int(a, zz), ref, 16));
    }
  }
}

TEST_CASE("complete Bell polynomials: recurrence vs explicit forms") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<BigReal> x;
    for (int i = 0; i < 4; ++i) x.emplace_back(dist(rng));
    auto y = bell_complete(x);
    REQUIRE(y.size() == 5);
    CHECK(y[0] == 1L);
    CHECK(ulp_close(y[1], x[0], 4));
    CHECK(ulp_close(y[2], x[0] * x[0] + x[1], 4));
    CHECK(ulp_close(y[3], x[0] * x[0] * x[0] + 3 * x[0] * x[1] + x[2], 4));
    BigReal x0sq = x[0] * x[0];
    CHECK(ulp_close(y[4], x0sq * x0sq + 6 * x0sq * x[1] + 3 * x[1] * x[1] +
                              4 * x[0] * x[2] + x[3],
                    4));
  }
  // pinned values
  auto y = bell_complete({BigReal(3L), BigReal(4L)});
  CHECK(y[2] == 13L);
  auto y4 = bell_complete({BigReal(1L), BigReal(1L), BigReal(1L), BigReal(1L)});
  CHECK(y4[4] == 15L);
}

TEST_CASE("X moments: closed forms") {
  const MathConstants& c = constants();
  CHECK(X(0, 4) == 24L);
  CHECK(ulp_close(X(1, 0), -c.euler_gamma(), 4));
  CHECK(ulp_close(X(2, 0),
                  c.euler_gamma() * c.euler_gamma() + c.pi() * c.pi() / 6L, 4));
  CHECK_THROWS_AS(X(1, -1), IndexSetError);
}

TEST_CASE("X moments agree with quadrature @slow") {
  // integral of e^-s s^alpha ln^n s over (0,inf), split at s=1; the
  // integrand is tanh-sinh friendly on (0,1) and panel-smooth beyond.
  for (long n = 0; n <= 2; ++n) {
    for (long alpha = 0; alpha <= 10; ++alpha) {
      Fn1 f01 = [&](const BigReal& s) -> BigReal {
        return exp(-s) * pow_si(s, alpha) * pow_si(log(s), n);
      };
      BigReal left = tanh_sinh_01(f01, 256);
      // right part: s in [1, S], truncate where e^-s s^alpha |ln s|^n < 1e-40
      BigReal right(0L, 256);
      const GLRule& r = gl_rule(48, 256);
      BigReal lo(1L), hi(2L);
      for (int p = 0; p < 60; ++p) {
        right += gl_integrate(f01, lo, hi, r);
        lo = hi;
        hi = ldexp2(hi, 1);
        BigReal bound = exp(-lo) * pow_si(lo, alpha) * pow_si(log(lo), n);
        if (abs(bound) < BigReal("1e-40")) break;
      }
      BigReal quad = left + right;
      BigReal closed = X(n, alpha);
      CHECK_MESSAGE(rel_diff(quad, closed) < BigReal("1e-25"),
                    "n=", n, " alpha=", alpha);
    }
  }
}

TEST_CASE("incomplete beta at one half: quarter-digamma identity") {
  // 2 * B_{1/2}(1/2, 1/2) = pi, i.e. the digamma gap at the quarter
  // points comes out at exactly pi.
  const MathConstants& c = constants();
  BigReal half = BigReal(1L) / 2L;
  BigReal b = inc_beta_half(half, half);
  CHECK(ulp_close(ldexp2(b, 1), c.pi(), 4));
  // another pinned value: B_{1/2}(-1/2, 3/2) = integral_0^(1/2)
  // x^(-3/2)(1-x)^(1/2) dx; cross-check by tanh-sinh on (0,1/2)
  BigReal ref = tanh_sinh_01(
      [&](const BigReal& x) -> BigReal {
        BigReal xs = x / 2;
        return pow(xs, BigReal(-1.5)) * sqrt(1 - xs) / 2;
      },
      256);
  BigReal got = inc_beta_half(-half, 1 + half);
  CHECK(rel_diff(ref, got) < BigReal("1e-70"));
}
