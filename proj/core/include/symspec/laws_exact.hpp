#pragma once

// Exact finite-N laws for complex symmetric (class AI-dagger) Gaussian
// matrices: the joint eigenvalue/eigenvector density factor g(x,y), the
// radial eigenvalue density rho(r), and the eigenvector nonorthogonality
// distributions P_0(t) (spectral origin) and P_r(t) (conditioned on radius),
// together with their CDFs and first moments. Valid for any N >= 2.
//
// All densities are assembled in log space: for N beyond a few hundred the
// raw factors (incomplete gammas, x^{N/2} e^{-x/2}, e^{xy/2}) overflow
// doubles long before the densities themselves become extreme.

#include <cstdint>

#include "symspec/specfun.hpp"

namespace symspec::laws_exact {

// Below this radius P_r(t) returns its analytic r -> 0 limit P_0(t); the
// limit is exact and avoids 0/0 in the N^2 r / rho(r) prefactor.
inline constexpr double kRadiusFloor = 1e-8;

struct LawContext {
  int n;                   // matrix size N >= 2
  double ln_norm_density;  // ln( 2 sqrt(N) / Gamma(N+2) )
  double ln_norm_overlap;  // ln( N^2 / Gamma(N+2) )
  double ln_gamma_n;       // cached ln Gamma(N)
  double ln_gamma_half;    // cached ln Gamma((N+3)/2)

  explicit LawContext(int n);
};

struct OverlapPoint {
  double r;  // radial coordinate |z| >= 0
  double t;  // nonorthogonality parameter >= 0
};

// ln g(x, y) for x >= 0, y in [0,1]. g is a positive density factor
// throughout the domain; the returned sign is asserted positive.
specfun::SignedLog g_factor(const LawContext& ctx, double x, double y);

// Radial eigenvalue density rho(r), normalized so that the integral over
// [0, inf) is 1. rho(0) = 0 and rho(r)/r -> N/(N+1) as r -> 0.
double radial_density(const LawContext& ctx, double r);
double ln_radial_density(const LawContext& ctx, double r);

// CDF of rho; monotone, F(0) = 0, F(inf) = 1 up to quadrature tolerance.
double radial_cdf(const LawContext& ctx, double r);

// Nonorthogonality density at the spectral origin. For N = 2 it carries an
// integrable t^{-1/2} singularity at t = 0. Mean is (N-1)/2; all higher
// moments diverge through the universal t^{-3} tail.
double overlap_density_origin(const LawContext& ctx, double t);
double ln_overlap_density_origin(const LawContext& ctx, double t);

// Nonorthogonality density conditioned on radius r. Normalized in t for
// every r; below kRadiusFloor it equals overlap_density_origin exactly.
double overlap_density(const LawContext& ctx, const OverlapPoint& p);
double ln_overlap_density(const LawContext& ctx, const OverlapPoint& p);

// CDF of overlap_density in t, integrated in the substituted variable
// y = 1/(1+t) which maps [0, inf) to (0, 1] and removes the heavy tail.
double overlap_cdf(const LawContext& ctx, const OverlapPoint& p);

// First moment of overlap_density; the only finite moment (the t^{-3} tail
// kills the second and higher). Computed in the y = 1/(1+t) variable.
double overlap_mean(const LawContext& ctx, double r);

// Joint density of (r, t): rho(r) * P_r(t), evaluated in the algebraically
// cancelled form so the rho factors never divide out numerically.
double joint_density(const LawContext& ctx, const OverlapPoint& p);

}  // namespace symspec::laws_exact
