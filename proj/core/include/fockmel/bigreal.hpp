#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace fockmel {

/// Raised when an iterative or quadrature routine fails to converge
/// within its evaluation budget, or a matrix factorization breaks down.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a requested index combination lies outside the domain
/// the closed-form reductions support.
class IndexSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arbitrary-precision real number backed by MPFR.
///
/// Semantics:
///  - every operation rounds to nearest (ties to even);
///  - a binary operation carries the larger of the two operand precisions;
///  - mixed BigReal/integer arithmetic carries the BigReal's precision;
///  - the default constructor takes the process-wide default precision,
///    which is at least 64 bits and can be changed between computations
///    but must stay fixed while a computation is in flight.
///
/// Identical inputs at identical precision produce identical bits on
/// every run; nothing here depends on the host's float environment.
class BigReal {
 public:
  static void set_default_precision(long bits);
  static long default_precision();

  BigReal() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }
  explicit BigReal(long n, long bits = 0) {
    mpfr_init2(v_, bits > 0 ? bits : default_precision());
    mpfr_set_si(v_, n, MPFR_RNDN);
  }
  explicit BigReal(int n, long bits = 0) : BigReal(static_cast<long>(n), bits) {}
  explicit BigReal(unsigned long n, long bits = 0) {
    mpfr_init2(v_, bits > 0 ? bits : default_precision());
    mpfr_set_ui(v_, n, MPFR_RNDN);
  }
  explicit BigReal(double d, long bits = 0) {
    mpfr_init2(v_, bits > 0 ? bits : default_precision());
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  /// Parses a decimal string at the given precision.
  explicit BigReal(const char* decimal, long bits = 0) {
    mpfr_init2(v_, bits > 0 ? bits : default_precision());
    if (mpfr_set_str(v_, decimal, 10, MPFR_RNDN) != 0)
      throw std::invalid_argument(std::string("BigReal: bad literal: ") + decimal);
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  /// Zero at an explicit precision.
  static BigReal zero(long bits) { return BigReal(0L, bits); }

  long prec() const { return mpfr_get_prec(v_); }

  /// Returns a copy rounded to the given precision.
  BigReal rounded(long bits) const {
    BigReal r(0L, bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  BigReal operator-() const {
    BigReal r(0L, prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  BigReal& operator+=(const BigReal& o) { return apply2(mpfr_add, o); }
  BigReal& operator-=(const BigReal& o) { return apply2(mpfr_sub, o); }
  BigReal& operator*=(const BigReal& o) { return apply2(mpfr_mul, o); }
  BigReal& operator/=(const BigReal& o) { return apply2(mpfr_div, o); }

  BigReal& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
  BigReal& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
  BigReal& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
  BigReal& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

  friend BigReal operator+(const BigReal& a, const BigReal& b) { return bin(mpfr_add, a, b); }
  friend BigReal operator-(const BigReal& a, const BigReal& b) { return bin(mpfr_sub, a, b); }
  friend BigReal operator*(const BigReal& a, const BigReal& b) { return bin(mpfr_mul, a, b); }
  friend BigReal operator/(const BigReal& a, const BigReal& b) { return bin(mpfr_div, a, b); }

  friend BigReal operator+(const BigReal& a, long b) { BigReal r(a); r += b; return r; }
  friend BigReal operator-(const BigReal& a, long b) { BigReal r(a); r -= b; return r; }
  friend BigReal operator*(const BigReal& a, long b) { BigReal r(a); r *= b; return r; }
  friend BigReal operator/(const BigReal& a, long b) { BigReal r(a); r /= b; return r; }
  friend BigReal operator+(long a, const BigReal& b) { return b + a; }
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator-(long a, const BigReal& b) {
    BigReal r(0L, b.prec());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(long a, const BigReal& b) {
    BigReal r(0L, b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

 private:
  using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

  BigReal& apply2(mpfr_bin_fn fn, const BigReal& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
      BigReal r(0L, mpfr_get_prec(o.v_));
      fn(r.v_, v_, o.v_, MPFR_RNDN);
      mpfr_swap(v_, r.v_);
    } else {
      fn(v_, v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  static BigReal bin(mpfr_bin_fn fn, const BigReal& a, const BigReal& b) {
    BigReal r(0L, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
/// x^n for any integer n (n < 0 allowed, x != 0 then).
BigReal pow_si(const BigReal& x, long n);
BigReal pow(const BigReal& x, const BigReal& y);
/// x * 2^k, exact.
BigReal ldexp2(const BigReal& x, long k);
BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

/// Deterministic scientific-notation rendering with `digits` significant
/// decimal digits, e.g. "-2.903724377034e+00". digits >= 2.
std::string to_decimal(const BigReal& x, long digits);

/// Renders with enough digits to reproduce the value exactly at its
/// own precision (ceil(bits * log10(2)) + 2).
std::string to_decimal_full(const BigReal& x);

/// |a - b| <= ulps * 2^(e_max - prec) where e_max is the larger binary
/// exponent of the pair and prec the smaller of the two precisions.
/// Exact equality (including both zero) always passes.
bool ulp_close(const BigReal& a, const BigReal& b, long ulps);

/// Relative distance |a-b| / max(|a|,|b|), zero when both vanish.
BigReal rel_diff(const BigReal& a, const BigReal& b);

/// Minimal complex pair used where intermediate identities carry an
/// imaginary part that must cancel in final results.
struct BigComplex {
  BigReal re, im;

  BigComplex() = default;
  explicit BigComplex(BigReal r) : re(std::move(r)), im(0L) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

  static BigComplex i_times(const BigReal& x) { return BigComplex(BigReal(0L), x); }

  BigComplex operator-() const { return BigComplex(-re, -im); }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re + b.re, a.im + b.im);
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re - b.re, a.im - b.im);
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend BigComplex operator*(const BigReal& a, const BigComplex& b) {
    return BigComplex(a * b.re, a * b.im);
  }
  friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return b * a; }

  /// Multiplication by the imaginary unit.
  BigComplex rot90() const { return BigComplex(-im, re); }
};

}  // namespace fockmel
