#include <doctest.h>

#include "fockmel/bigreal.hpp"
#include "fockmel/constants.hpp"

using namespace fockmel;

TEST_CASE("default precision is process-wide and at least 64") {
  CHECK(BigReal::default_precision() == 256);
  CHECK_THROWS_AS(BigReal::set_default_precision(32), std::invalid_argument);
  BigReal x;
  CHECK(x.prec() == 256);
  CHECK(x.is_zero());
}

TEST_CASE("binary operations carry the larger operand precision") {
  BigReal a(1L, 128);
  BigReal b(1L, 320);
  CHECK((a + b).prec() == 320);
  CHECK((b * a).prec() == 320);
  CHECK((a / b).prec() == 320);
  BigReal c = a;
  c += b;
  CHECK(c.prec() == 320);
  CHECK(c == BigReal(2L));
}

TEST_CASE("integer arithmetic is exact") {
  BigReal x(7L);
  BigReal y = x * 6L - 2L;
  CHECK(y == 40L);
  CHECK((y / 8L) == BigReal(5L));
  CHECK(pow_si(BigReal(2L), 10) == 1024L);
  CHECK(pow_si(BigReal(2L), -2) == BigReal(1L) / 4L);
  CHECK(ldexp2(BigReal(3L), 4) == 48L);
  CHECK(ldexp2(BigReal(3L), -1) == BigReal(3L) / 2L);
}

TEST_CASE("decimal rendering is deterministic and parseable") {
  BigReal x = BigReal(1L) / 3L;
  std::string s = to_decimal(x, 30);
  CHECK(s.substr(0, 10) == "3.33333333");
  CHECK(s.substr(s.size() - 4) == "e-01");
  // Round trip at full precision.
  BigReal y(to_decimal_full(x).c_str());
  CHECK(ulp_close(x, y, 2));
  CHECK(to_decimal(BigReal(0L), 5) == "0.0000e+00");
  CHECK(to_decimal(BigReal(-42L), 4) == "-4.200e+01");
}

TEST_CASE("ulp_close marks neighbours and rejects distant values") {
  BigReal a(1L);
  BigReal eps = ldexp2(BigReal(1L), -255);
  CHECK(ulp_close(a, a + eps, 4));
  BigReal far = a + ldexp2(BigReal(1L), -200);
  CHECK_FALSE(ulp_close(a, far, 4));
}

TEST_CASE("constants reproduce their defining identities") {
  const MathConstants& c = constants(256);
  CHECK(ulp_close(exp(c.ln2()), BigReal(2L), 4));
  CHECK(ulp_close(c.sqrt2() * c.sqrt2(), BigReal(2L), 4));
  CHECK(ulp_close(exp(c.arccosh_sqrt2()), 1 + c.sqrt2(), 4));
  // cosh(arccosh_sqrt2) = sqrt2
  BigReal ch(0L, 256);
  mpfr_cosh(ch.raw(), c.arccosh_sqrt2().raw(), MPFR_RNDN);
  CHECK(ulp_close(ch, c.sqrt2(), 4));
  CHECK(ulp_close(c.zeta(2), c.pi() * c.pi() / 6L, 4));
}

TEST_CASE("constants match pinned 50-digit literals") {
  const MathConstants& c = constants(256);
  CHECK(ulp_close(c.pi(),
                  BigReal("3.1415926535897932384626433832795028841971693993751"), 4));
  CHECK(ulp_close(c.ln2(),
                  BigReal("0.69314718055994530941723212145817656807550013436026"), 4));
  CHECK(ulp_close(c.euler_gamma(),
                  BigReal("0.57721566490153286060651209008240243104215933593992"), 4));
  CHECK(ulp_close(c.sqrt2(),
                  BigReal("1.4142135623730950488016887242096980785696718753769"), 4));
  CHECK(ulp_close(c.zeta(3),
                  BigReal("1.2020569031595942853997381615114499907649862923405"), 4));
}

TEST_CASE("complex pair arithmetic") {
  BigComplex z(BigReal(3L), BigReal(4L));
  BigComplex w = z * z;
  CHECK(w.re == -7L);
  CHECK(w.im == 24L);
  BigComplex r = z.rot90();
  CHECK(r.re == -4L);
  CHECK(r.im == 3L);
  BigComplex s = BigComplex::i_times(BigReal(2L));
  CHECK(s.re == 0L);
  CHECK(s.im == 2L);
}
