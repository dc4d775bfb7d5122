#include "symspec/laws_exact.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace symspec::laws_exact {

using specfun::SignedLog;

namespace {

double require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0)) throw std::domain_error(std::string(what) + " must be >= 0");
  return v;
}

SignedLog term(double ln_magnitude, double factor) {
  if (factor == 0.0) return {};
  return {ln_magnitude + std::log(std::abs(factor)), factor > 0 ? 1 : -1};
}

}  // namespace

LawContext::LawContext(int n_) : n(n_) {
  if (n < 2) throw std::domain_error("LawContext: requires N >= 2");
  const double nd = n;
  const double ln_gamma_np2 = specfun::ln_gamma(nd + 2.0);
  ln_norm_density = std::log(2.0) + 0.5 * std::log(nd) - ln_gamma_np2;
  ln_norm_overlap = 2.0 * std::log(nd) - ln_gamma_np2;
  ln_gamma_n = specfun::ln_gamma(nd);
  ln_gamma_half = specfun::ln_gamma((nd + 3.0) / 2.0);
}

SignedLog g_factor(const LawContext& ctx, double x, double y) {
  require_nonnegative(x, "g_factor: x");
  if (!(y >= 0.0 && y <= 1.0)) throw std::domain_error("g_factor: y must lie in [0,1]");
  const double nd = ctx.n;

  if (x == 0.0) {
    // the polynomial brace collapses to Gamma(N) * N(N-1)
    return SignedLog::from_log(ctx.ln_gamma_n);
  }

  const double ln_x = std::log(x);
  const double ln_upper = ctx.ln_gamma_n + specfun::ln_reg_gamma_upper(nd, x);  // ln Gamma(N,x)
  const double ln_power = nd * ln_x - x;                                        // ln x^N e^{-x}

  // brace = x^N e^{-x} (N-1-x+xy) + Gamma(N,x) [ (N-1)(N-2x+xy) + (1-y) x^2 ]
  const std::array<SignedLog, 3> parts = {
      term(ln_power, nd - 1.0 - x + x * y),
      term(ln_upper, (nd - 1.0) * (nd - 2.0 * x + x * y)),
      term(ln_upper, (1.0 - y) * x * x),
  };
  SignedLog brace = specfun::log_sum(parts);
  if (brace.sign <= 0) {
    throw std::logic_error("g_factor: density factor lost positivity (implementation bug)");
  }
  brace.log += x * y / 2.0 - std::log(nd) - std::log(nd - 1.0);
  return brace;
}

double ln_radial_density(const LawContext& ctx, double r) {
  require_nonnegative(r, "radial_density: r");
  if (r == 0.0) return -std::numeric_limits<double>::infinity();
  const double nd = ctx.n;
  const double x = 0.5 * nd * r * r;
  const double ln_x = std::log(x);

  const double ln_k = 0.5 * nd * ln_x - 0.5 * x;                                // ln k(x)
  const double ln_upper = ctx.ln_gamma_n + specfun::ln_reg_gamma_upper(nd, x);  // ln Gamma(N,x)
  const double ln_lower =
      ctx.ln_gamma_half + specfun::ln_reg_gamma_lower((nd + 3.0) / 2.0, 0.5 * x);
  const double ln_sqrt_half_x = 0.5 * (ln_x - std::log(2.0));
  const double ln_pref_lower = 0.5 * nd * std::log(2.0) + ln_lower;

  // sqrt(x/2) [k^2 + (N - x/2) Gamma(N,x)]
  //   + 2^{N/2} gamma((N+3)/2, x/2) [k + (N-1-x) Gamma(N,x) / (2k)]
  const std::array<SignedLog, 4> parts = {
      SignedLog::from_log(ln_sqrt_half_x + 2.0 * ln_k),
      term(ln_sqrt_half_x + ln_upper, nd - 0.5 * x),
      SignedLog::from_log(ln_pref_lower + ln_k),
      term(ln_pref_lower + ln_upper - std::log(2.0) - ln_k, nd - 1.0 - x),
  };
  const SignedLog brace = specfun::log_sum(parts);
  if (brace.sign <= 0) {
    throw std::logic_error("radial_density: density lost positivity (implementation bug)");
  }
  return ctx.ln_norm_density + brace.log;
}

double radial_density(const LawContext& ctx, double r) {
  if (r == 0.0) return 0.0;
  return std::exp(ln_radial_density(ctx, r));
}

double radial_cdf(const LawContext& ctx, double r) {
  require_nonnegative(r, "radial_cdf: r");
  if (r == 0.0) return 0.0;
  // mass above r ~ 3 is exponentially small for every N; split there so the
  // integrator never chases a flat tail
  const double split = std::min(r, 3.0);
  auto f = [&ctx](double u) { return radial_density(ctx, u); };
  double acc = specfun::integrate(f, 0.0, split, 1e-10, 1e-12).value;
  if (r > split) acc += specfun::integrate(f, split, r, 1e-10, 1e-12).value;
  return std::min(acc, 1.0);
}

double ln_overlap_density_origin(const LawContext& ctx, double t) {
  require_nonnegative(t, "overlap_density_origin: t");
  const double nd = ctx.n;
  const double ln_1pt = std::log1p(t);
  if (t == 0.0) {
    if (ctx.n == 2) return std::numeric_limits<double>::infinity();  // integrable t^{-1/2}
    if (ctx.n == 3) return std::log((nd * nd - 1.0) / 4.0);
    return -std::numeric_limits<double>::infinity();
  }
  return std::log((nd * nd - 1.0) / 4.0) - 3.0 * ln_1pt +
         0.5 * (nd - 3.0) * (std::log(t) - ln_1pt);
}

double overlap_density_origin(const LawContext& ctx, double t) {
  return std::exp(ln_overlap_density_origin(ctx, t));
}

double ln_overlap_density(const LawContext& ctx, const OverlapPoint& p) {
  require_nonnegative(p.t, "overlap_density: t");
  require_nonnegative(p.r, "overlap_density: r");
  if (p.r < kRadiusFloor) return ln_overlap_density_origin(ctx, p.t);
  const double nd = ctx.n;
  const double x = 0.5 * nd * p.r * p.r;
  const double y = 1.0 / (1.0 + p.t);
  const SignedLog g = g_factor(ctx, x, y);
  return ctx.ln_norm_overlap + std::log(p.r) - ln_radial_density(ctx, p.r) + g.log +
         ln_overlap_density_origin(ctx, p.t);
}

double overlap_density(const LawContext& ctx, const OverlapPoint& p) {
  return std::exp(ln_overlap_density(ctx, p));
}

namespace {

// P_r(t) dt rewritten in y = 1/(1+t): t = 1/y - 1, dt = dy / y^2.
double overlap_density_in_y(const LawContext& ctx, double r, double y) {
  const double t = (1.0 - y) / y;
  const double ln_jac = -2.0 * std::log(y);
  return std::exp(ln_overlap_density(ctx, {r, t}) + ln_jac);
}

}  // namespace

double overlap_cdf(const LawContext& ctx, const OverlapPoint& p) {
  require_nonnegative(p.t, "overlap_cdf: t");
  require_nonnegative(p.r, "overlap_cdf: r");
  if (p.t == 0.0) return 0.0;
  const double y_lo = 1.0 / (1.0 + p.t);
  auto f = [&](double y) { return overlap_density_in_y(ctx, p.r, y); };
  const double v = specfun::integrate(f, y_lo, 1.0, 1e-9, 1e-12).value;
  return std::min(v, 1.0);
}

double overlap_mean(const LawContext& ctx, double r) {
  require_nonnegative(r, "overlap_mean: r");
  auto f = [&](double y) {
    const double t = (1.0 - y) / y;
    return t * overlap_density_in_y(ctx, r, y);
  };
  // integrand is O(1) near y = 0 (the t^{-3} tail) and vanishes at y = 1
  return specfun::integrate(f, 0.0, 1.0, 1e-9, 1e-12).value;
}

double joint_density(const LawContext& ctx, const OverlapPoint& p) {
  require_nonnegative(p.t, "joint_density: t");
  require_nonnegative(p.r, "joint_density: r");
  if (p.r == 0.0) return 0.0;
  // rho(r) P_r(t) with the rho factors cancelled analytically
  const double nd = ctx.n;
  const double x = 0.5 * nd * p.r * p.r;
  const double y = 1.0 / (1.0 + p.t);
  const SignedLog g = g_factor(ctx, x, y);
  return std::exp(ctx.ln_norm_overlap + std::log(p.r) + g.log +
                  ln_overlap_density_origin(ctx, p.t));
}

}  // namespace symspec::laws_exact
