#pragma once

#include "fockmel/bigreal.hpp"

#include <deque>

namespace fockmel {

/// Shared transcendental constants at one working precision.
///
/// Each instance is immutable after construction apart from the zeta
/// cache, which only grows. Obtain instances through constants(), which
/// memoizes one per precision; they are built eagerly so concurrent
/// readers never race a partially built entry.
class MathConstants {
 public:
  explicit MathConstants(long bits);

  long prec() const { return bits_; }

  const BigReal& ln2() const { return ln2_; }
  const BigReal& pi() const { return pi_; }
  const BigReal& sqrt2() const { return sqrt2_; }
  const BigReal& euler_gamma() const { return euler_gamma_; }
  /// ln(1 + sqrt 2), the value of arccosh at sqrt 2.
  const BigReal& arccosh_sqrt2() const { return arccosh_sqrt2_; }

  /// zeta(n) for integer n >= 2, cached.
  const BigReal& zeta(long n) const;

 private:
  long bits_;
  BigReal ln2_, pi_, sqrt2_, euler_gamma_, arccosh_sqrt2_;
  // deque: growth must not invalidate references already handed out
  mutable std::deque<BigReal> zeta_cache_;  // index k holds zeta(k+2)
};

/// The constants bundle for the given precision (default: the process
/// default precision).
const MathConstants& constants(long bits = 0);

}  // namespace fockmel
