#include "fockmel/constants.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace fockmel {

MathConstants::MathConstants(long bits)
    : bits_(bits),
      ln2_(0L, bits),
      pi_(0L, bits),
      sqrt2_(0L, bits),
      euler_gamma_(0L, bits),
      arccosh_sqrt2_(0L, bits) {
  mpfr_const_log2(ln2_.raw(), MPFR_RNDN);
  mpfr_const_pi(pi_.raw(), MPFR_RNDN);
  mpfr_sqrt_ui(sqrt2_.raw(), 2, MPFR_RNDN);
  mpfr_const_euler(euler_gamma_.raw(), MPFR_RNDN);
  mpfr_log1p(arccosh_sqrt2_.raw(), sqrt2_.raw(), MPFR_RNDN);
}

const BigReal& MathConstants::zeta(long n) const {
  if (n < 2) throw std::invalid_argument("MathConstants::zeta: n must be >= 2");
  static std::mutex zeta_mu;
  std::lock_guard<std::mutex> lock(zeta_mu);
  size_t idx = static_cast<size_t>(n - 2);
  while (zeta_cache_.size() <= idx) {
    long k = static_cast<long>(zeta_cache_.size()) + 2;
    BigReal z(0L, bits_);
    mpfr_zeta_ui(z.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    zeta_cache_.push_back(std::move(z));
  }
  return zeta_cache_[idx];
}

const MathConstants& constants(long bits) {
  if (bits <= 0) bits = BigReal::default_precision();
  static std::mutex mu;
  static std::map<long, std::unique_ptr<MathConstants>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bits);
  if (it == cache.end())
    it = cache.emplace(bits, std::make_unique<MathConstants>(bits)).first;
  return *it->second;
}

}  // namespace fockmel
