#include "fockmel/bigreal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>

namespace fockmel {

namespace {
std::atomic<long> g_default_prec{256};
}

void BigReal::set_default_precision(long bits) {
  if (bits < 64)
    throw std::invalid_argument("BigReal: default precision must be >= 64 bits");
  g_default_prec.store(bits, std::memory_order_relaxed);
}

long BigReal::default_precision() {
  return g_default_prec.load(std::memory_order_relaxed);
}

namespace {

using mpfr_un_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

BigReal un(mpfr_un_fn fn, const BigReal& x) {
  BigReal r(0L, x.prec());
  fn(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal abs(const BigReal& x) { return un(mpfr_abs, x); }
BigReal sqrt(const BigReal& x) { return un(mpfr_sqrt, x); }
BigReal exp(const BigReal& x) { return un(mpfr_exp, x); }
BigReal log(const BigReal& x) { return un(mpfr_log, x); }
BigReal log10(const BigReal& x) { return un(mpfr_log10, x); }

BigReal pow_si(const BigReal& x, long n) {
  BigReal r(0L, x.prec());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(0L, std::max(x.prec(), y.prec()));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal ldexp2(const BigReal& x, long k) {
  BigReal r(0L, x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }
BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

std::string to_decimal(const BigReal& x, long digits) {
  if (digits < 2) digits = 2;
  if (!x.is_finite()) {
    if (mpfr_nan_p(x.raw())) return "nan";
    return x.is_negative() ? "-inf" : "inf";
  }
  if (x.is_zero()) {
    std::string s = x.is_negative() ? "-0." : "0.";
    s.append(static_cast<size_t>(digits - 1), '0');
    s += "e+00";
    return s;
  }
  mpfr_exp_t e = 0;
  char* m = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDN);
  if (m == nullptr) throw NumericalError("to_decimal: mpfr_get_str failed");
  std::string mant(m);
  mpfr_free_str(m);

  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  // mpfr exponent convention: value = 0.mant * 10^e.
  long dec_exp = static_cast<long>(e) - 1;
  std::string body = mant.substr(0, 1);
  body += ".";
  body += mant.substr(1);
  char expbuf[32];
  std::snprintf(expbuf, sizeof expbuf, "e%+03ld", dec_exp);
  return sign + body + expbuf;
}

std::string to_decimal_full(const BigReal& x) {
  // 10^d >= 2^prec with two spare digits.
  long digits = static_cast<long>(x.prec() * 0.30102999566398119521) + 3;
  return to_decimal(x, digits);
}

bool ulp_close(const BigReal& a, const BigReal& b, long ulps) {
  if (a == b) return true;
  if (!a.is_finite() || !b.is_finite()) return false;
  BigReal d = abs(a - b);
  if (a.is_zero() || b.is_zero()) {
    // Against an exact zero only another zero is "close"; fall back to
    // the nonzero operand's own ulp scale.
    const BigReal& nz = a.is_zero() ? b : a;
    mpfr_exp_t e = mpfr_get_exp(nz.raw());
    long prec = std::min(a.prec(), b.prec());
    BigReal bound = ldexp2(BigReal(ulps), static_cast<long>(e) - prec);
    return d <= bound;
  }
  mpfr_exp_t ea = mpfr_get_exp(a.raw());
  mpfr_exp_t eb = mpfr_get_exp(b.raw());
  mpfr_exp_t emax = std::max(ea, eb);
  long prec = std::min(a.prec(), b.prec());
  BigReal bound = ldexp2(BigReal(ulps), static_cast<long>(emax) - prec);
  return d <= bound;
}

BigReal rel_diff(const BigReal& a, const BigReal& b) {
  BigReal d = abs(a - b);
  BigReal m = max(abs(a), abs(b));
  if (m.is_zero()) return BigReal(0L, std::max(a.prec(), b.prec()));
  return d / m;
}

}  // namespace fockmel
