#include "symspec/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symspec/specfun.hpp"

namespace symspec::empirics {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalDistribution: empty sample set");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::ecdf(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

Histogram histogram(std::span<const double> samples, std::vector<double> edges) {
  if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end()) ||
      std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("histogram: edges must be strictly increasing");
  }
  Histogram h;
  h.edges = std::move(edges);
  h.densities.assign(h.edges.size() - 1, 0.0);
  std::vector<std::int64_t> counts(h.densities.size(), 0);
  std::int64_t in_range = 0;
  for (const double x : samples) {
    // half-open bins [e_b, e_{b+1})
    if (x < h.edges.front() || x >= h.edges.back()) {
      ++h.out_of_range;
      continue;
    }
    const auto it = std::upper_bound(h.edges.begin(), h.edges.end(), x);
    ++counts[static_cast<std::size_t>(it - h.edges.begin()) - 1];
    ++in_range;
  }
  if (in_range == 0) throw std::invalid_argument("histogram: no samples inside the edge range");
  h.total_weight = static_cast<double>(in_range);
  for (std::size_t b = 0; b < counts.size(); ++b) {
    const double width = h.edges[b + 1] - h.edges[b];
    h.densities[b] = static_cast<double>(counts[b]) / (h.total_weight * width);
  }
  return h;
}

double ks_distance(const EmpiricalDistribution& emp, const std::function<double(double)>& cdf) {
  const auto xs = emp.sorted_samples();
  const double m = static_cast<double>(xs.size());
  double sup = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
    const double f = cdf(xs[i]);
    const double hi = static_cast<double>(j + 1) / m;  // ECDF at the point
    sup = std::max(sup, std::abs(hi - f));
    i = j + 1;
  }
  return std::min(sup, 1.0);
}

AnnulusSelection annulus_filter(std::span<const spectra::SpectralRecord> records, double r_lo,
                                double r_hi) {
  if (!(r_lo >= 0.0) || !(r_lo < r_hi)) {
    throw std::invalid_argument("annulus_filter: requires 0 <= r_lo < r_hi");
  }
  AnnulusSelection sel;
  for (const auto& rec : records) {
    const double r = std::abs(rec.z);
    if (r >= r_lo && r < r_hi) {
      sel.records.push_back(rec);
      if (rec.defective) ++sel.defective;
    }
  }
  return sel;
}

EdgeRescaled edge_rescale(int n, std::span<const spectra::SpectralRecord> records) {
  if (n < 2) throw std::domain_error("edge_rescale: requires n >= 2");
  const double rtn = std::sqrt(static_cast<double>(n));
  EdgeRescaled out;
  out.values.reserve(records.size());
  for (const auto& rec : records) {
    if (rec.defective) {
      ++out.skipped;
      continue;
    }
    laws_asymptotic::EdgeCoordinate c;
    c.s = rtn * (0.5 * std::norm(rec.z) - 1.0);
    c.sigma = rec.t / rtn;
    out.values.push_back(c);
  }
  return out;
}

BulkRescaled bulk_rescale(int n, std::span<const spectra::SpectralRecord> records) {
  if (n < 2) throw std::domain_error("bulk_rescale: requires n >= 2");
  BulkRescaled out;
  out.tau.reserve(records.size());
  for (const auto& rec : records) {
    if (rec.defective) {
      ++out.skipped;
      continue;
    }
    out.tau.push_back(rec.t / static_cast<double>(n));
  }
  return out;
}

HaarCheck haar_lemma_check(int n, const std::function<double(double)>& f, std::int64_t samples,
                           ensembles::PhiloxStream& rng) {
  if (n < 2) throw std::domain_error("haar_lemma_check: requires n >= 2");
  if (samples < 1000) throw std::invalid_argument("haar_lemma_check: requires >= 1000 samples");

  double sum = 0.0, sum2 = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const auto v = ensembles::sample_haar_unit_vector(n, rng);
    std::complex<double> vtv = 0.0;
    for (const auto& c : v) vtv += c * c;
    const double val = f(std::norm(vtv));
    sum += val;
    sum2 += val * val;
  }
  const double m = static_cast<double>(samples);
  HaarCheck out;
  out.mc = sum / m;
  const double var = std::max(0.0, sum2 / m - out.mc * out.mc);
  const double se = std::sqrt(var / m);

  const double nd = n;
  out.quad = (nd - 1.0) * specfun::integrate(
                              [&](double p) { return std::pow(p, nd - 2.0) * f(1.0 - p * p); },
                              0.0, 1.0, 1e-10, 1e-13)
                              .value;
  out.z_score = se > 0.0 ? (out.mc - out.quad) / se : 0.0;
  return out;
}

TabulatedCdf::TabulatedCdf(const std::function<double(double)>& pdf, double lo, double hi,
                           int points, bool normalize)
    : lo_(lo) {
  if (points < 2 || !(hi > lo)) throw std::invalid_argument("TabulatedCdf: bad grid");
  step_ = (hi - lo) / (points - 1);
  std::vector<double> f(points);
  for (int i = 0; i < points; ++i) f[i] = pdf(lo + step_ * i);
  cum_.resize(points);
  cum_[0] = 0.0;
  for (int i = 1; i < points; ++i) {
    cum_[i] = cum_[i - 1] + 0.5 * (f[i - 1] + f[i]) * step_;
  }
  mass_ = cum_.back();
  if (normalize && mass_ > 0.0) {
    for (auto& c : cum_) c /= mass_;
    mass_ = 1.0;
  }
}

double TabulatedCdf::operator()(double x) const {
  if (x <= lo_) return 0.0;
  const double u = (x - lo_) / step_;
  const auto i = static_cast<std::size_t>(u);
  if (i + 1 >= cum_.size()) return cum_.back();
  const double w = u - static_cast<double>(i);
  return cum_[i] * (1.0 - w) + cum_[i + 1] * w;
}

}  // namespace symspec::empirics
