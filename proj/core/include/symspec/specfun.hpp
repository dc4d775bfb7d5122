#pragma once

// Special functions and adaptive quadrature used by the analytic laws.
//
// Everything here is pure and reentrant. Densities elsewhere in the library
// are assembled in log space, so alongside the regularized incomplete gamma
// functions P(a,x) and Q(a,x) this header exposes their logarithms and a
// small signed-log value type for combining terms whose raw magnitudes
// overflow double precision.

#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symspec::specfun {

// Raised when adaptive quadrature exhausts its subdivision budget. The best
// available estimate is preserved so callers can decide whether to accept it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

struct GammaArgs {
  double a;  // shape, > 0
  double x;  // argument, >= 0
};

// A value stored as (log magnitude, sign). sign is -1, 0 or +1; log is
// -inf when sign is 0.
struct SignedLog {
  double log = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static SignedLog from_value(double v) {
    if (v == 0.0) return {};
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
  }
  static SignedLog from_log(double lg, int sg = 1) { return {lg, sg}; }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log); }
  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {log + o.log, sign * o.sign};
  }
};

// Signed log-sum-exp of the terms.
SignedLog log_sum(std::span<const SignedLog> terms);

// ln Gamma(a) for a > 0. Relative error <= 1e-13 for a in [0.5, 1e6].
double ln_gamma(double a);

// Regularized incomplete gamma functions, Q(a,x) = Gamma(a,x)/Gamma(a) and
// P(a,x) = 1 - Q(a,x), plus log variants that stay finite deep in the tails.
// Method: lower series for x < a+1, upper continued fraction otherwise, and
// a uniform large-shape expansion near the transition when a exceeds
// kUniformShapeThreshold (see specfun.cpp).
double reg_gamma_upper(double a, double x);
double reg_gamma_lower(double a, double x);
double ln_reg_gamma_upper(double a, double x);
double ln_reg_gamma_lower(double a, double x);

inline double reg_gamma_upper(const GammaArgs& g) { return reg_gamma_upper(g.a, g.x); }
inline double reg_gamma_lower(const GammaArgs& g) { return reg_gamma_lower(g.a, g.x); }
inline double ln_reg_gamma_upper(const GammaArgs& g) { return ln_reg_gamma_upper(g.a, g.x); }

// Complementary error function and its scaled variant erfcx(x) = e^{x^2} erfc(x).
// erfcx stays finite and accurate for x up to 1e8 and beyond.
double erfc(double x);
double erfcx(double x);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1,1]: Kronrod abscissae (non-negative half,
// descending, ending at the center node 0), Kronrod weights, and the
// embedded 7-point Gauss weights for the odd-indexed abscissae.
inline constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGaussW[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
  double lo, hi, value, error;
  std::int64_t order;  // creation index, used as a deterministic tie-break
  bool operator<(const Segment& o) const {
    if (error != o.error) return error < o.error;
    return order > o.order;
  }
};

// One G7-K15 evaluation on [lo, hi]: returns {K15 value, |K15 - G7|}.
template <typename F>
std::pair<double, double> gk15(const F& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = kKronrodW[7] * fc;
  double gauss = kGaussW[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodX[i];
    const double fsum = f(c - dx) + f(c + dx);
    kron += kKronrodW[i] * fsum;
    if (i % 2 == 1) gauss += kGaussW[(i - 1) / 2] * fsum;
  }
  return {kron * h, std::abs(kron - gauss) * h};
}

template <typename F>
QuadratureResult integrate_finite(const F& f, double lo, double hi, double rel_tol,
                                  double abs_tol, int max_segments) {
  QuadratureResult out;
  std::priority_queue<Segment> heap;
  std::int64_t order = 0;

  auto push = [&](double a, double b) {
    auto [v, e] = gk15(f, a, b);
    out.evaluations += 15;
    if (std::isnan(v)) {
      throw std::domain_error("integrate: integrand returned NaN on [" + std::to_string(a) +
                              ", " + std::to_string(b) + "]");
    }
    heap.push(Segment{a, b, v, e, order++});
    return Segment{a, b, v, e, 0};
  };

  Segment whole = push(lo, hi);
  double total_value = whole.value;
  double total_error = whole.error;

  while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
    if (static_cast<int>(heap.size()) >= max_segments) {
      throw ConvergenceError("integrate: subdivision budget exhausted", total_value, total_error);
    }
    Segment worst = heap.top();
    heap.pop();
    if (worst.error == 0.0) {
      throw ConvergenceError("integrate: intervals collapsed before convergence", total_value,
                             total_error);
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // interval no longer splittable in double precision; freeze its estimate
      total_error -= worst.error;
      worst.error = 0.0;
      worst.order = order++;
      heap.push(worst);
      continue;
    }
    Segment left = push(worst.lo, mid);
    Segment right = push(mid, worst.hi);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
  }

  out.value = total_value;
  out.abs_error_estimate = total_error;
  return out;
}

}  // namespace detail

// Adaptive Gauss-Kronrod 7-15 quadrature of f over [lo, hi]. hi may be
// +infinity, in which case the range is mapped through x = lo + u/(1-u),
// u in [0,1). Endpoint singularities up to x^{-1/2} are handled by
// subdivision; anything worse is the caller's job to transform away.
// Deterministic: identical inputs give bit-identical outputs.
template <typename F>
QuadratureResult integrate(F&& f, double lo, double hi, double rel_tol = 1e-10,
                           double abs_tol = 1e-12, int max_segments = 4000) {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be positive");
  }
  if (std::isnan(lo) || std::isnan(hi) || std::isinf(lo)) {
    throw std::invalid_argument("integrate: bad interval");
  }
  if (lo == hi) return {0.0, 0.0, 0};
  if (lo > hi) throw std::invalid_argument("integrate: lo > hi");

  if (std::isinf(hi)) {
    auto g = [&f, lo](double u) {
      const double om = 1.0 - u;
      return f(lo + u / om) / (om * om);
    };
    return detail::integrate_finite(g, 0.0, 1.0, rel_tol, abs_tol, max_segments);
  }
  return detail::integrate_finite(f, lo, hi, rel_tol, abs_tol, max_segments);
}

}  // namespace symspec::specfun
