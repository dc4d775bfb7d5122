#pragma once

// Large-N limit laws: spectral edge profiles and bulk/edge nonorthogonality
// distributions for the complex symmetric (AI-dagger) class and for the real
// and complex Ginibre ensembles, in the shared normalization that puts the
// spectral edge at r = sqrt(2).
//
// Every erfc product that carries a Gaussian growth factor is rewritten in
// terms of erfcx before evaluation, so the profiles stay finite for |s| well
// beyond 50.

#include <optional>

#include "symspec/specfun.hpp"

namespace symspec::laws_asymptotic {

enum class EnsembleTag {
  AI_DAGGER,       // complex symmetric
  GINIBRE_REAL,    // real Ginibre, edge statistics of the real eigenvalues
  GINIBRE_COMPLEX  // complex Ginibre
};

// Edge-scaled coordinates: s = sqrt(N)(r^2/2 - 1) locates a point relative
// to the spectral boundary; sigma = t / sqrt(N) rescales the
// nonorthogonality parameter at the edge.
struct EdgeCoordinate {
  double s = 0.0;
  std::optional<double> sigma;
};

// Edge profile Theta(s) of the mean radial density: the large-N density is
// r * Theta(sqrt(N)(r^2/2 - 1)). Decreasing, with Theta(-inf) = 1 and
// Theta(+inf) = 0. The AI-dagger profile approaches its left limit only
// algebraically (1 - Theta ~ s^{-2}), unlike the Ginibre profiles.
double edge_profile(EnsembleTag tag, double s);

// Large-N radial density r * Theta_AI(s(r)); tends to the triangular law
// r * 1[r <= sqrt(2)] as N -> infinity.
double density_large_n(int n, double r);

// Limiting bulk law of tau = t/N at radius r inside the support: an
// inverse-gamma density with shape 2 and scale <tau> = (1 - r^2/2)/2.
// Only the first moment exists. Domain error for r >= sqrt(2).
double bulk_overlap_law(double r, double tau);
double bulk_overlap_mean(double r);

// Closed-form CDF of the bulk law (inverse-gamma, shape 2).
double bulk_overlap_cdf(double r, double tau);

// Limiting edge law of sigma = t/sqrt(N) at edge position s, per ensemble.
// Normalized in sigma for AI_DAGGER and GINIBRE_COMPLEX; the GINIBRE_REAL
// law as printed integrates to less than 1 (e.g. 1/sqrt(2) at s = 0).
double edge_overlap_law(EnsembleTag tag, double s, double sigma);

// ln of the exact exponential factor e^{xy/2} at the edge, evaluated from
// its closed form in (N, s, sigma); finite for any sigma > 0.
double refined_edge_factor(int n, double s, double sigma);

// AI-dagger edge law with the leading-order exponential factor replaced by
// the exact one above. Note the replacement repairs only one of several
// truncations, so it does not uniformly tighten the finite-N agreement.
double edge_overlap_law_refined(int n, double s, double sigma);

// Test-only oracles: leading-order asymptotic forms of the pieces the exact
// laws are built from. Compared against exact specfun evaluations in the
// verification suites; not used on any production path.
namespace oracle {

enum class PieceKind { K, GAMMA_LOWER, GAMMA_UPPER, P0, EXP_FACTOR };
enum class Regime { BULK, EDGE };

// Returns the tagged asymptotic form. Scale conventions:
//   GAMMA_UPPER          linear (the regularized ratio, bounded by 1)
//   all other kinds      natural log (raw magnitudes over/underflow doubles)
// Coordinates: K / GAMMA_LOWER / GAMMA_UPPER take coord = p (BULK, p in
// [0,1)) or coord = s (EDGE). P0 takes coord = tau (BULK) or sigma (EDGE).
// EXP_FACTOR takes coord = p or s plus coord2 = tau or sigma.
// The GAMMA_LOWER edge form carries the corrected sqrt(N/2) scale; see the
// implementation note in laws_asymptotic.cpp.
double asymptotic_piece(PieceKind kind, Regime regime, int n, double coord,
                        double coord2 = std::numeric_limits<double>::quiet_NaN());

}  // namespace oracle

namespace testing {
// Mutation hook for the verification suite: flips the sign of the second
// term of the AI-dagger edge profile so edge checks must fail. Never set
// outside tests.
extern bool flip_edge_profile_sign;
}  // namespace testing

}  // namespace symspec::laws_asymptotic
