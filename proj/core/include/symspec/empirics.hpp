#pragma once

// Empirical distribution machinery for comparing Monte-Carlo samples with
// the analytic laws: ECDFs, Kolmogorov-Smirnov distances, density-normalized
// histograms, annulus selection, and the bulk/edge rescalings of the
// nonorthogonality parameter.
//
// Conventions, used consistently everywhere:
//   - bins and annuli are half-open, [lo, hi);
//   - the ECDF is right-continuous; ks_distance compares right-continuous
//     values at the distinct sample points (both signed gaps), so a point
//     mass coinciding with a reference jump contributes zero.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "symspec/ensembles.hpp"
#include "symspec/laws_asymptotic.hpp"
#include "symspec/spectra.hpp"

namespace symspec::empirics {

class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> samples);

  // right-continuous: fraction of samples <= x
  double ecdf(double x) const;
  std::int64_t count() const { return static_cast<std::int64_t>(sorted_.size()); }
  std::span<const double> sorted_samples() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

struct Histogram {
  std::vector<double> edges;      // B+1, strictly increasing
  std::vector<double> densities;  // B, normalized so sum(density * width) = 1
  double total_weight = 0.0;      // in-range sample count
  std::int64_t out_of_range = 0;  // counted, never binned
};

Histogram histogram(std::span<const double> samples, std::vector<double> edges);

// sup over distinct sample values of |ECDF - cdf|, both one-sided gaps.
double ks_distance(const EmpiricalDistribution& emp, const std::function<double(double)>& cdf);

struct AnnulusSelection {
  std::vector<spectra::SpectralRecord> records;  // r_lo <= |z| < r_hi, flags preserved
  std::int64_t defective = 0;                    // flagged records among them
};

AnnulusSelection annulus_filter(std::span<const spectra::SpectralRecord> records, double r_lo,
                                double r_hi);

struct EdgeRescaled {
  std::vector<laws_asymptotic::EdgeCoordinate> values;  // s and sigma per record
  std::int64_t skipped = 0;                             // flagged records
};

// s = sqrt(N)(|z|^2/2 - 1), sigma = t/sqrt(N); flagged records are skipped
// and counted.
EdgeRescaled edge_rescale(int n, std::span<const spectra::SpectralRecord> records);

struct BulkRescaled {
  std::vector<double> tau;  // t/N per unflagged record
  std::int64_t skipped = 0;
};

BulkRescaled bulk_rescale(int n, std::span<const spectra::SpectralRecord> records);

struct HaarCheck {
  double mc = 0.0;       // Monte-Carlo mean of f(|v^T v|^2) over Haar vectors
  double quad = 0.0;     // (N-1) * int_0^1 p^{N-2} f(1-p^2) dp
  double z_score = 0.0;  // (mc - quad) / standard error
};

// Monte-Carlo versus quadrature check of the Haar-vector moment identity.
HaarCheck haar_lemma_check(int n, const std::function<double(double)>& f, std::int64_t samples,
                           ensembles::PhiloxStream& rng);

// Cumulative-trapezoid tabulation of a density on a uniform grid, for use
// as a KS reference when per-sample quadrature would be too slow. Evaluation
// interpolates linearly; below lo it returns 0, above hi the top value
// (1 when normalized).
class TabulatedCdf {
 public:
  TabulatedCdf(const std::function<double(double)>& pdf, double lo, double hi, int points,
               bool normalize);
  double operator()(double x) const;
  double total_mass() const { return mass_; }

 private:
  double lo_, step_, mass_;
  std::vector<double> cum_;
};

}  // namespace symspec::empirics
