#include "fockmel/quadrature.hpp"

#include "fockmel/constants.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace fockmel {

namespace {

long resolve_bits(long bits) { return bits > 0 ? bits : BigReal::default_precision(); }

// Legendre P_n(x) and P_n'(x) on [-1,1] by the three-term recurrence.
void legendre_pair(long n, const BigReal& x, BigReal& p, BigReal& dp) {
  long b = x.prec();
  BigReal p0(1L, b), p1 = x;
  for (long k = 1; k < n; ++k) {
    BigReal p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  // P'_n = n (x P_n - P_{n-1}) / (x^2 - 1)
  dp = n * (x * p1 - p0) / (x * x - 1);
}

std::unique_ptr<GLRule> build_gl_rule(long n, long bits) {
  long wb = bits + 32;  // guard bits for the Newton solve
  auto rule = std::make_unique<GLRule>();
  rule->x.reserve(static_cast<size_t>(n));
  rule->w.reserve(static_cast<size_t>(n));

  std::vector<BigReal> xs(static_cast<size_t>(n), BigReal(0L, wb));
  std::vector<BigReal> ws(static_cast<size_t>(n), BigReal(0L, wb));

  long half = (n + 1) / 2;
  for (long i = 0; i < half; ++i) {
    // Chebyshev estimate of the i-th root (descending in x).
    double guess = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    BigReal x(guess, wb);
    BigReal p(0L, wb), dp(0L, wb);
    BigReal tol = ldexp2(BigReal(1L, wb), -(bits + 16));
    for (int it = 0; it < 200; ++it) {
      legendre_pair(n, x, p, dp);
      BigReal step = p / dp;
      x -= step;
      if (abs(step) <= tol) break;
      if (it == 199) throw NumericalError("gl_rule: Newton failed to converge");
    }
    legendre_pair(n, x, p, dp);
    BigReal w = 2 / ((1 - x * x) * dp * dp);
    xs[static_cast<size_t>(i)] = x;
    ws[static_cast<size_t>(i)] = w;
    // Mirror: roots are symmetric about 0.
    xs[static_cast<size_t>(n - 1 - i)] = -x;
    ws[static_cast<size_t>(n - 1 - i)] = w;
  }

  // Map [-1,1] -> [0,1]; xs is descending, so (1-x)/2 comes out ascending.
  for (long i = 0; i < n; ++i) {
    BigReal x01 = ((1 - xs[static_cast<size_t>(i)]) / 2).rounded(bits);
    BigReal w01 = (ws[static_cast<size_t>(i)] / 2).rounded(bits);
    rule->x.push_back(std::move(x01));
    rule->w.push_back(std::move(w01));
  }
  return rule;
}

}  // namespace

const GLRule& gl_rule(long n, long bits) {
  if (n < 2) throw std::invalid_argument("gl_rule: order must be >= 2");
  long b = resolve_bits(bits);
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<GLRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, b);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_gl_rule(n, b)).first;
  return *it->second;
}

BigReal gl_integrate(const Fn1& f, const BigReal& a, const BigReal& b,
                     const GLRule& rule) {
  BigReal len = b - a;
  BigReal acc(0L, std::max(a.prec(), b.prec()));
  for (size_t i = 0; i < rule.x.size(); ++i)
    acc += rule.w[i] * f(a + len * rule.x[i]);
  return acc * len;
}

BigReal tanh_sinh_01(const Fn1& f, long bits, long max_level) {
  long b = resolve_bits(bits);
  long wb = b + 32;
  const MathConstants& c = constants(wb);
  BigReal half_pi = c.pi() / 2;
  BigReal target = ldexp2(BigReal(1L, wb), -(b + 8));
  // Nodes with 1 - |y| below this limit contribute only underflow-level
  // weight for any integrable singularity and are skipped.
  BigReal edge = ldexp2(BigReal(1L, wb), -(wb + 64));

  // t-range: node weights decay like exp(-pi sinh t); past
  // sinh(t) ~ 0.45 (wb + 64) they fall below the edge cutoff.
  double tmax_d = std::log(0.45 * static_cast<double>(wb + 64)) + 1.5;

  auto node_term = [&](const BigReal& t) -> BigReal {
    // y = tanh(pi/2 sinh t), weight = pi/2 cosh t / cosh^2(pi/2 sinh t)
    BigReal sh(0L, wb), ch(0L, wb);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
    BigReal arg = half_pi * sh;
    BigReal cha(0L, wb);
    mpfr_cosh(cha.raw(), arg.raw(), MPFR_RNDN);
    BigReal y(0L, wb);
    mpfr_tanh(y.raw(), arg.raw(), MPFR_RNDN);
    BigReal w = half_pi * ch / (cha * cha);
    if (1 - abs(y) < edge) return BigReal(0L, wb);
    // map y in (-1,1) to x in (0,1): x = (1+y)/2, dx = dy/2
    BigReal x = ldexp2(1 + y, -1);
    if (x <= 0 || x >= 1) return BigReal(0L, wb);
    return w * f(x) / 2;
  };

  // Level 0 (h = 1): all integer abscissas.
  BigReal h(1L, wb);
  BigReal sum = node_term(BigReal(0L, wb));
  {
    long kmax = static_cast<long>(tmax_d) + 1;
    for (long k = 1; k <= kmax; ++k) {
      BigReal t(k, wb);
      sum += node_term(t) + node_term(-t);
    }
  }
  BigReal prev(0L, wb);
  BigReal result = sum * h;

  for (long level = 1; level <= max_level; ++level) {
    h = ldexp2(BigReal(1L, wb), -level);
    long kmax = static_cast<long>(tmax_d / h.to_double()) + 1;
    // Only odd multiples of h are new at this level.
    BigReal add(0L, wb);
    for (long k = 1; k <= kmax; k += 2) {
      BigReal t = h * k;
      add += node_term(t) + node_term(-t);
    }
    sum += add;
    prev = result;
    result = sum * h;
    if (level >= 3) {
      BigReal diff = abs(result - prev);
      if (diff <= target * max(abs(result), BigReal(1L, wb)))
        return result.rounded(b);
    }
  }
  throw NumericalError("tanh_sinh_01: did not converge within max_level");
}

namespace {

// One inner slice: D(s) = int_0^s du int_0^u dt W(s,t,u), fixed rule.
BigReal wedge_slice(const Fn3& W, const BigReal& s, const GLRule& r,
                    long* evals) {
  long b = s.prec();
  BigReal outer(0L, b);
  for (size_t iu = 0; iu < r.x.size(); ++iu) {
    BigReal u = s * r.x[iu];
    BigReal inner(0L, b);
    for (size_t it = 0; it < r.x.size(); ++it) {
      BigReal t = u * r.x[it];
      inner += r.w[it] * W(s, t, u);
    }
    outer += r.w[iu] * inner * u;  // dt-interval length
  }
  *evals += static_cast<long>(r.x.size() * r.x.size());
  return outer * s;  // du-interval length
}

}  // namespace

QuadResult integrate_wedge(const Fn3& W, const BigReal& rel_tol, long bits,
                           const WedgeOptions& opt) {
  long b = resolve_bits(bits);
  const GLRule& rin = gl_rule(opt.inner_order, b);
  const GLRule& rhi = gl_rule(opt.outer_hi, b);
  const GLRule& rlo = gl_rule(opt.outer_lo, b);

  QuadResult res;
  res.value = BigReal(0L, b);
  res.abs_error = BigReal(0L, b);

  auto slice = [&](const BigReal& s) -> BigReal {
    return wedge_slice(W, s, rin, &res.evals);
  };

  auto check_budget = [&]() {
    if (res.evals > opt.budget)
      throw NumericalError("integrate_wedge: evaluation budget exhausted");
  };

  // Integrate g over [a, c] with the embedded pair; accumulate result
  // and error estimate. Returns |panel value|.
  auto panel = [&](const Fn1& g, const BigReal& a, const BigReal& c) -> BigReal {
    BigReal hi = gl_integrate(g, a, c, rhi);
    BigReal lo = gl_integrate(g, a, c, rlo);
    res.value += hi;
    res.abs_error += abs(hi - lo);
    check_budget();
    return abs(hi);
  };

  // Left part: s in (0, 1], s = e^-x, ds = -e^-x dx, x in [0, inf).
  Fn1 gx = [&](const BigReal& x) -> BigReal {
    BigReal s = exp(-x);
    return slice(s) * s;
  };
  // Right part: s in [1, inf).
  Fn1 gs = [&](const BigReal& s) -> BigReal { return slice(s); };

  // Doubling panels with a two-consecutive-small stop rule. The
  // threshold is relative to the running total, so the sweep runs
  // until its own contribution has converged; the damped integrand
  // makes successive panels shrink geometrically once past the peak.
  auto sweep = [&](const Fn1& g, long cap, const char* what) {
    BigReal lo_edge(0L, b), hi_edge(1L, b);
    int small_streak = 0;
    while (true) {
      BigReal contrib = panel(g, lo_edge, hi_edge);
      BigReal thr = rel_tol * max(abs(res.value), contrib) / 16;
      if (contrib <= thr)
        ++small_streak;
      else
        small_streak = 0;
      if (small_streak >= 2) {
        // Geometric decay past the peak: the dropped tail is on the
        // order of the final panel. Charge it to the error estimate.
        res.abs_error += 2 * contrib;
        return;
      }
      lo_edge = hi_edge;
      hi_edge = ldexp2(hi_edge, 1);
      if (hi_edge > BigReal(cap, b))
        throw NumericalError(std::string("integrate_wedge: ") + what +
                             " sweep exceeded its range cap");
    }
  };

  sweep(gx, opt.max_outer_x, "log-substituted");
  sweep(gs, opt.max_outer_s, "exponential");

  BigReal scale = abs(res.value);
  if (!scale.is_zero() && res.abs_error > rel_tol * scale)
    throw NumericalError("integrate_wedge: error estimate above tolerance");
  return res;
}

}  // namespace fockmel
