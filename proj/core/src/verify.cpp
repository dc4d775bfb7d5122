#include "symspec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <mutex>
#include <sstream>
#include <thread>

#include "symspec/empirics.hpp"
#include "symspec/laws_asymptotic.hpp"
#include "symspec/laws_exact.hpp"
#include "symspec/specfun.hpp"

namespace symspec::verify {

namespace {

namespace la = laws_asymptotic;
namespace le = laws_exact;
using la::EnsembleTag;
using ensembles::EnsembleKind;
using ensembles::EnsembleSpec;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

class Reporter {
 public:
  explicit Reporter(VerificationReport& report) : report_(report) {}

  // runs fn, which returns (measured, note); errors count as failures
  void check(const std::string& name, double threshold, Direction dir,
             const std::function<std::pair<double, std::string>()>& fn) {
    CheckResult r;
    r.name = name;
    r.threshold = threshold;
    r.direction = dir;
    const double t0 = now_seconds();
    try {
      auto [measured, note] = fn();
      r.measured = measured;
      r.note = std::move(note);
      r.passed = dir == Direction::BELOW ? measured <= threshold : measured > threshold;
    } catch (const std::exception& e) {
      r.measured = std::numeric_limits<double>::quiet_NaN();
      r.passed = false;
      r.note = std::string("error: ") + e.what();
    }
    r.seconds = now_seconds() - t0;
    report_.checks.push_back(std::move(r));
  }

 private:
  VerificationReport& report_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

// ------------------------------- analytic ---------------------------------

std::pair<double, std::string> radial_normalization() {
  double worst = 0.0;
  int worst_n = 0;
  for (const int n : {2, 3, 5, 10, 50, 200, 1000}) {
    const le::LawContext ctx(n);
    const auto q = specfun::integrate([&](double r) { return le::radial_density(ctx, r); }, 0.0,
                                      specfun::kInfinity, 1e-10, 1e-13);
    const double dev = std::abs(q.value - 1.0);
    if (dev > worst) {
      worst = dev;
      worst_n = n;
    }
  }
  return {worst, "worst at N=" + std::to_string(worst_n)};
}

std::pair<double, std::string> origin_slope() {
  const double r = 1e-3;
  double worst = 0.0;
  for (const int n : {2, 5, 10, 100}) {
    const le::LawContext ctx(n);
    const double nd = n;
    worst = std::max(worst, std::abs(le::radial_density(ctx, r) / r - nd / (nd + 1.0)));
  }
  return {worst, "slope checked at r=1e-3"};
}

std::pair<double, std::string> origin_overlap_mean() {
  double worst = 0.0;
  for (const int n : {2, 3, 10, 50}) {
    const le::LawContext ctx(n);
    const double expect = 0.5 * (n - 1.0);
    worst = std::max(worst, std::abs(le::overlap_mean(ctx, 0.0) - expect) / expect);
  }
  return {worst, "relative deviation of the mean from (N-1)/2"};
}

std::pair<double, std::string> origin_overlap_tail() {
  const double t = 1e6;
  double worst = 0.0;
  for (const int n : {2, 3, 10, 50}) {
    const le::LawContext ctx(n);
    const double nd = n;
    const double expect = (nd * nd - 1.0) / 4.0;
    const double got = t * t * t * le::overlap_density_origin(ctx, t);
    worst = std::max(worst, std::abs(got - expect) / expect);
  }
  return {worst, "t^3 P0(t) at t=1e6 vs (N^2-1)/4"};
}

std::pair<double, std::string> bulk_limit() {
  const int n = 2000;
  const le::LawContext ctx(n);
  double sup = 0.0;
  for (const double r : {0.0, 1.0}) {
    for (int i = 0; i < 100; ++i) {
      const double tau = 0.05 + (5.0 - 0.05) * i / 99.0;
      const double exact = n * le::overlap_density(ctx, {r, n * tau});
      sup = std::max(sup, std::abs(exact - la::bulk_overlap_law(r, tau)));
    }
  }
  return {sup, "sup over tau in [0.05,5], r in {0,1}, N=2000"};
}

std::pair<double, std::string> edge_density_profile() {
  const int n = 100;
  const le::LawContext ctx(n);
  const double rtn = std::sqrt(static_cast<double>(n));
  double sup = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double s = -5.0 + 0.1 * i;
    const double r = std::sqrt(2.0 * (1.0 + s / rtn));
    const double exact = le::radial_density(ctx, r) / r;
    sup = std::max(sup, std::abs(exact - la::edge_profile(EnsembleTag::AI_DAGGER, s)));
  }
  return {sup, "sup over s in [-5,5] at N=100; finite-N gap decays as 1/(2 sqrt(2N))"};
}

std::pair<double, std::string> edge_overlap_limit() {
  const int n = 10000;
  const le::LawContext ctx(n);
  const double rtn = std::sqrt(static_cast<double>(n));
  const double r = std::sqrt(2.0);
  double sup = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double sigma = 0.1 * i;
    const double exact = rtn * le::overlap_density(ctx, {r, rtn * sigma});
    sup = std::max(sup, std::abs(exact - la::edge_overlap_law(EnsembleTag::AI_DAGGER, 0.0, sigma)));
  }
  return {sup, "sup over sigma in [0.1,5] at N=1e4, s=0; gap decays as ~7.5/sqrt(N)"};
}

std::pair<double, std::string> asymptotic_pieces() {
  using la::oracle::PieceKind;
  using la::oracle::Regime;
  struct Sub {
    const char* label;
    int n;
    double dev;
    double tol;
  };
  std::vector<Sub> subs;

  const double p = 0.5;
  for (const int n : {200, 10000}) {
    const bool big = n == 10000;
    const double nd = n;
    const double rtn = std::sqrt(nd);

    // k(x) = x^{N/2} e^{-x/2}, scaled by N^{N/2}; exact value in logs
    auto ln_k_scaled = [&](double x) { return 0.5 * nd * std::log(x) - 0.5 * x - 0.5 * nd * std::log(nd); };
    subs.push_back({"k-bulk", n,
                    std::abs(ln_k_scaled(nd * p) -
                             la::oracle::asymptotic_piece(PieceKind::K, Regime::BULK, n, p)),
                    1e-10});
    {
      const double s = 1.0;
      const double x = nd * (1.0 + s / rtn);
      subs.push_back({"k-edge", n,
                      std::abs(ln_k_scaled(x) -
                               la::oracle::asymptotic_piece(PieceKind::K, Regime::EDGE, n, s)),
                      big ? 2.2e-3 : 1.5e-2});
    }

    // lower incomplete gamma, scaled by (N/2)^{(N+2)/2}
    auto ln_gl_scaled = [&](double x) {
      const double a = 0.5 * (nd + 3.0);
      return specfun::ln_gamma(a) + specfun::ln_reg_gamma_lower(a, x) -
             0.5 * (nd + 2.0) * std::log(0.5 * nd);
    };
    subs.push_back({"gl-bulk", n,
                    std::abs(ln_gl_scaled(0.5 * nd * p) - la::oracle::asymptotic_piece(
                                                              PieceKind::GAMMA_LOWER, Regime::BULK,
                                                              n, p)),
                    big ? 1.4e-3 : 6.2e-2});
    {
      const double s = 1.0;
      const double x = 0.5 * nd * (1.0 + s / rtn);
      subs.push_back({"gl-edge", n,
                      std::abs(ln_gl_scaled(x) - la::oracle::asymptotic_piece(
                                                     PieceKind::GAMMA_LOWER, Regime::EDGE, n, s)),
                      big ? 1.0e-2 : 7.0e-2});
    }

    // upper incomplete gamma, regularized (linear scale)
    subs.push_back({"gu-bulk", n,
                    std::abs(specfun::reg_gamma_upper(nd, nd * p) -
                             la::oracle::asymptotic_piece(PieceKind::GAMMA_UPPER, Regime::BULK, n,
                                                          p)),
                    1e-6});
    for (const double s : {0.0, 1.0}) {
      const double x = nd * (1.0 + s / rtn);
      const double tol = s == 0.0 ? (big ? 5e-3 : 1.2e-2) : (big ? 6e-6 : 3e-4);
      subs.push_back({s == 0.0 ? "gu-edge-s0" : "gu-edge-s1", n,
                      std::abs(specfun::reg_gamma_upper(nd, x) -
                               la::oracle::asymptotic_piece(PieceKind::GAMMA_UPPER, Regime::EDGE,
                                                            n, s)),
                      tol});
    }

    // origin overlap density P0 under bulk/edge rescaling (log scale)
    const le::LawContext ctx(n);
    {
      const double tau = 0.5;
      const double exact = le::ln_overlap_density_origin(ctx, nd * tau);
      subs.push_back({"p0-bulk", n,
                      std::abs(exact - la::oracle::asymptotic_piece(PieceKind::P0, Regime::BULK, n,
                                                                    tau)),
                      big ? 3e-4 : 1.3e-2});
      const double sigma = 0.5;
      const double exact_e = le::ln_overlap_density_origin(ctx, rtn * sigma);
      subs.push_back({"p0-edge", n,
                      std::abs(exact_e - la::oracle::asymptotic_piece(PieceKind::P0, Regime::EDGE,
                                                                      n, sigma)),
                      big ? 5.6e-2 : 3.7e-1});
    }

    // exponential factor e^{xy/2} (log scale)
    {
      const double tau = 0.5;
      const double exact = 0.5 * (nd * p) / (1.0 + nd * tau);
      subs.push_back({"exp-bulk", n,
                      std::abs(exact - la::oracle::asymptotic_piece(PieceKind::EXP_FACTOR,
                                                                    Regime::BULK, n, p, tau)),
                      big ? 1.3e-4 : 6.5e-3});
      const double s = 1.0, sigma = 0.5;
      const double x = nd * (1.0 + s / rtn);
      const double y = 1.0 / (1.0 + rtn * sigma);
      subs.push_back({"exp-edge", n,
                      std::abs(0.5 * x * y - la::oracle::asymptotic_piece(
                                                 PieceKind::EXP_FACTOR, Regime::EDGE, n, s, sigma)),
                      big ? 2.6e-2 : 1.6e-1});
    }
  }

  double worst_ratio = 0.0;
  const Sub* worst = nullptr;
  for (const auto& s : subs) {
    const double ratio = s.dev / s.tol;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = &s;
    }
  }
  std::string note = "max |deviation|/tolerance over " + std::to_string(subs.size()) +
                     " piece checks";
  if (worst) note += "; worst " + std::string(worst->label) + " at N=" + std::to_string(worst->n);
  return {worst_ratio, note};
}

// ------------------------------ monte carlo -------------------------------

empirics::TabulatedCdf radial_cdf_table(const le::LawContext& ctx, double hi) {
  return empirics::TabulatedCdf([&](double r) { return le::radial_density(ctx, r); }, 0.0, hi,
                                6001, false);
}

// CDF of t conditioned on radius, evaluated through the y = 1/(1+t) variable
// on a tabulated grid: F(t) = H(y(t)) with H(y) = int_y^1 pdf dy.
class OverlapCdfTable {
 public:
  OverlapCdfTable(const le::LawContext& ctx, double r, int points = 20001)
      : y_min_(1e-7), step_((1.0 - y_min_) / (points - 1)) {
    std::vector<double> f(points);
    for (int i = 0; i < points; ++i) {
      const double y = y_min_ + step_ * i;
      const double t = (1.0 - y) / y;
      f[i] = std::exp(le::ln_overlap_density(ctx, {r, t}) - 2.0 * std::log(y));
      if (!std::isfinite(f[i])) f[i] = 0.0;  // N=2 endpoint singularity at y=1
    }
    cum_from_top_.assign(points, 0.0);
    for (int i = points - 2; i >= 0; --i) {
      cum_from_top_[i] = cum_from_top_[i + 1] + 0.5 * (f[i] + f[i + 1]) * step_;
    }
  }

  double operator()(double t) const {
    if (t <= 0.0) return 0.0;
    const double y = 1.0 / (1.0 + t);
    if (y <= y_min_) return std::min(1.0, cum_from_top_.front());
    const double u = (y - y_min_) / step_;
    const auto i = static_cast<std::size_t>(u);
    if (i + 1 >= cum_from_top_.size()) return 0.0;
    const double w = u - static_cast<double>(i);
    return std::min(1.0, cum_from_top_[i] * (1.0 - w) + cum_from_top_[i + 1] * w);
  }

 private:
  double y_min_, step_;
  std::vector<double> cum_from_top_;
};

std::vector<double> radii_of(std::span<const spectra::SpectralRecord> records) {
  std::vector<double> r;
  r.reserve(records.size());
  for (const auto& rec : records) {
    if (!rec.defective) r.push_back(std::abs(rec.z));
  }
  return r;
}

std::vector<double> overlaps_of(std::span<const spectra::SpectralRecord> records) {
  std::vector<double> t;
  t.reserve(records.size());
  for (const auto& rec : records) {
    if (!rec.defective) t.push_back(rec.t);
  }
  return t;
}

struct GaussianAiArtifacts {
  double radial_ks;
  double overlap_ks;
  std::int64_t annulus_count;
  std::int64_t defective;
};

GaussianAiArtifacts gaussian_ai_checks(int workers) {
  const int n = 5;
  const EnsembleSpec spec{EnsembleKind::AI_GAUSSIAN, n, 42};
  const auto run = run_ensemble(spec, 40000, workers);
  const le::LawContext ctx(n);

  const empirics::EmpiricalDistribution radial(radii_of(run.records));
  const auto rcdf = radial_cdf_table(ctx, 6.0);
  const double radial_ks = empirics::ks_distance(radial, [&](double r) { return rcdf(r); });

  const auto sel = empirics::annulus_filter(run.records, 0.0, 0.2);
  const OverlapCdfTable ocdf(ctx, 0.1);
  const empirics::EmpiricalDistribution overlap(overlaps_of(sel.records));
  const double overlap_ks = empirics::ks_distance(overlap, [&](double t) { return ocdf(t); });

  std::int64_t defective = 0;
  for (const auto& rec : run.records) defective += rec.defective ? 1 : 0;
  return {radial_ks, overlap_ks, overlap.count(), defective};
}

std::pair<double, std::string> bulk_mean_mc(int workers) {
  const int n = 500;
  const EnsembleSpec spec{EnsembleKind::AI_GAUSSIAN, n, 2024};
  const auto run = run_ensemble(spec, 200, workers);
  const auto sel = empirics::annulus_filter(run.records, 0.9, 1.1);
  const auto bulk = empirics::bulk_rescale(n, sel.records);
  double mean = 0.0;
  for (const double tau : bulk.tau) mean += tau;
  mean /= static_cast<double>(bulk.tau.size());
  const double expect = 0.5 * (1.0 - 0.5 * 1.0);  // annulus midpoint r = 1
  return {std::abs(mean - expect) / expect,
          "mean tau = " + fmt(mean) + " vs " + fmt(expect) + " over " +
              std::to_string(bulk.tau.size()) + " records, " + std::to_string(bulk.skipped) +
              " flagged skipped"};
}

struct BernoulliArtifacts {
  double radial_ks;
  double overlap_ks;
};

BernoulliArtifacts bernoulli_checks(int workers) {
  const int n = 200;
  const EnsembleSpec spec{EnsembleKind::AI_BERNOULLI, n, 7};
  const auto run = run_ensemble(spec, 500, workers);

  // radial arm: compare with the large-N law r Theta(s(r)), normalized over
  // the tabulation window
  const empirics::TabulatedCdf rcdf([&](double r) { return la::density_large_n(n, r); }, 0.0, 3.0,
                                    6001, true);
  const empirics::EmpiricalDistribution radial(radii_of(run.records));
  const double radial_ks = empirics::ks_distance(radial, [&](double r) { return rcdf(r); });

  // overlap arm: origin annulus, tau = t/N against the limiting bulk law
  const auto sel = empirics::annulus_filter(run.records, 0.0, 0.2);
  const auto bulk = empirics::bulk_rescale(n, sel.records);
  const empirics::EmpiricalDistribution taus(bulk.tau);
  const double rbar = 0.1;
  const double overlap_ks =
      empirics::ks_distance(taus, [&](double tau) { return la::bulk_overlap_cdf(rbar, tau); });
  return {radial_ks, overlap_ks};
}

std::pair<double, std::string> haar_identity(int n, int which, std::uint64_t seed) {
  auto rng = ensembles::derive_stream(seed, 0);
  const auto f = which == 1 ? std::function<double(double)>([](double y) { return y; })
                            : std::function<double(double)>([](double y) { return y * y; });
  const auto check = empirics::haar_lemma_check(n, f, 100000, rng);
  return {std::abs(check.z_score),
          "mc=" + fmt(check.mc) + " quad=" + fmt(check.quad) + " at N=" + std::to_string(n)};
}

struct SolverArtifacts {
  double max_residual;
  double max_trace_dev;
  double max_lr_dev;
};

SolverArtifacts solver_integrity(int workers) {
  const int n = 50;
  const std::int64_t matrices = 1000;
  std::vector<double> res(matrices, 0.0), trace(matrices, 0.0), lr(matrices, 0.0);

  const int w = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int worker = 0; worker < w; ++worker) {
    pool.emplace_back([&, worker] {
      for (std::int64_t i = worker; i < matrices; i += w) {
        auto rng = ensembles::derive_stream(202, static_cast<std::uint64_t>(i));
        const auto j = ensembles::sample({EnsembleKind::AI_GAUSSIAN, n, 202}, rng);
        const auto sys = spectra::eig_right(j);
        const double fnorm = spectra::frobenius_norm(j);

        const auto records = spectra::spectral_records(j, i);
        double worst = 0.0;
        for (const auto& rec : records) worst = std::max(worst, rec.residual);
        res[i] = worst;

        std::complex<double> tr = 0.0, sum = 0.0;
        for (int d = 0; d < n; ++d) tr += j(d, d);
        for (const auto& z : sys.values) sum += z;
        trace[i] = std::abs(sum - tr) / fnorm;

        lr[i] = spectra::left_right_check(j, sys);
      }
    });
  }
  for (auto& th : pool) th.join();

  SolverArtifacts out{0.0, 0.0, 0.0};
  for (std::int64_t i = 0; i < matrices; ++i) {
    out.max_residual = std::max(out.max_residual, res[i]);
    out.max_trace_dev = std::max(out.max_trace_dev, trace[i]);
    out.max_lr_dev = std::max(out.max_lr_dev, lr[i]);
  }
  return out;
}

// Edge-window comparison used by the universality control: KS distance of
// the edge-rescaled s-samples against the AI-dagger profile shape on
// s in [-6, 6].
double edge_window_ks(const McRun& run, int n) {
  const auto rescaled = empirics::edge_rescale(n, run.records);
  std::vector<double> s_values;
  for (const auto& c : rescaled.values) {
    if (c.s >= -6.0 && c.s < 6.0) s_values.push_back(c.s);
  }
  const empirics::TabulatedCdf cdf(
      [&](double s) { return la::edge_profile(EnsembleTag::AI_DAGGER, s); }, -6.0, 6.0, 4001,
      true);
  const empirics::EmpiricalDistribution emp(std::move(s_values));
  return empirics::ks_distance(emp, [&](double s) { return cdf(s); });
}

}  // namespace

McRun run_ensemble(const EnsembleSpec& spec, std::int64_t matrices, int workers) {
  const int w = std::max(1, workers);
  std::vector<std::vector<spectra::SpectralRecord>> slots(matrices);
  std::vector<std::vector<std::int64_t>> failures(w);

  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int worker = 0; worker < w; ++worker) {
    pool.emplace_back([&, worker] {
      try {
        for (std::int64_t i = worker; i < matrices; i += w) {
          auto rng = ensembles::derive_stream(spec.master_seed, static_cast<std::uint64_t>(i));
          const auto j = ensembles::sample(spec, rng);
          try {
            slots[i] = spectra::spectral_records(j, i);
          } catch (const spectra::SolverError&) {
            failures[worker].push_back(i);
          }
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  McRun out;
  out.records.reserve(static_cast<std::size_t>(matrices) * spec.n);
  for (auto& slot : slots) {
    out.records.insert(out.records.end(), slot.begin(), slot.end());
  }
  for (auto& f : failures) {
    out.failed_matrices.insert(out.failed_matrices.end(), f.begin(), f.end());
  }
  std::sort(out.failed_matrices.begin(), out.failed_matrices.end());
  return out;
}

VerificationReport run_acceptance(const AcceptanceOptions& opts) {
  VerificationReport report;
  Reporter run(report);
  const bool analytic = opts.suite != Suite::MONTECARLO;
  const bool montecarlo = opts.suite != Suite::ANALYTIC;

  if (analytic) {
    run.check("01-radial-normalization", 1e-8, Direction::BELOW, radial_normalization);
    run.check("02-origin-slope", 1e-3, Direction::BELOW, origin_slope);
    run.check("03a-origin-overlap-mean", 1e-6, Direction::BELOW, origin_overlap_mean);
    run.check("03b-origin-overlap-tail", 1e-4, Direction::BELOW, origin_overlap_tail);
    run.check("04-bulk-limit-law", 0.02, Direction::BELOW, bulk_limit);
    run.check("05-edge-density-profile", 0.01, Direction::BELOW, edge_density_profile);
    run.check("06-edge-overlap-law", 0.05, Direction::BELOW, edge_overlap_limit);
    run.check("11-asymptotic-pieces", 1.0, Direction::BELOW, asymptotic_pieces);
  }

  if (montecarlo) {
    GaussianAiArtifacts g{};
    run.check("07a-gaussian-radial-ks", 0.02, Direction::BELOW, [&] {
      g = gaussian_ai_checks(opts.workers);
      return std::make_pair(g.radial_ks, "N=5, 4e4 matrices, seed 42; " +
                                             std::to_string(g.defective) + " defective excluded");
    });
    run.check("07b-gaussian-overlap-ks", 0.05, Direction::BELOW, [&] {
      return std::make_pair(g.overlap_ks, "annulus [0,0.2), rbar=0.1, " +
                                              std::to_string(g.annulus_count) + " records");
    });
    run.check("08-bulk-overlap-mean", 0.05, Direction::BELOW,
              [&] { return bulk_mean_mc(opts.workers); });
    BernoulliArtifacts b{};
    run.check("09a-bernoulli-radial-ks", 0.03, Direction::BELOW, [&] {
      b = bernoulli_checks(opts.workers);
      return std::make_pair(b.radial_ks, std::string("N=200, 500 matrices, seed 7"));
    });
    run.check("09b-bernoulli-overlap-ks", 0.07, Direction::BELOW, [&] {
      return std::make_pair(b.overlap_ks, std::string("origin annulus vs bulk law at rbar=0.1"));
    });
    run.check("10a-haar-identity-linear", 3.0, Direction::BELOW,
              [&] { return haar_identity(2, 1, 11); });
    run.check("10b-haar-identity-square", 3.0, Direction::BELOW,
              [&] { return haar_identity(5, 2, 12); });
    SolverArtifacts s{};
    run.check("12a-solver-residual", 1e-10, Direction::BELOW, [&] {
      s = solver_integrity(opts.workers);
      return std::make_pair(s.max_residual, std::string("1e3 AI matrices at N=50, seed 202"));
    });
    run.check("12b-trace-identity", 1e-10, Direction::BELOW,
              [&] { return std::make_pair(s.max_trace_dev, std::string()); });
    run.check("12c-left-right-symmetry", 1e-10, Direction::BELOW,
              [&] { return std::make_pair(s.max_lr_dev, std::string()); });
    run.check("13a-ai-edge-profile-control", 0.035, Direction::BELOW, [&] {
      const auto pos = run_ensemble({EnsembleKind::AI_GAUSSIAN, 100, 98}, 600, opts.workers);
      return std::make_pair(edge_window_ks(pos, 100),
                            std::string("positive arm: AI samples match the AI edge profile"));
    });
    run.check("13b-ginibre-negative-control", 0.035, Direction::ABOVE, [&] {
      const auto neg = run_ensemble({EnsembleKind::GINIBRE_COMPLEX, 100, 99}, 600, opts.workers);
      return std::make_pair(edge_window_ks(neg, 100),
                            std::string("Ginibre samples must fail the AI edge profile"));
    });
  }

  report.finalize();
  return report;
}

}  // namespace symspec::verify
