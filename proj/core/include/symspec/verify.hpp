#pragma once

// The acceptance suite: every agreed correctness criterion of the library,
// from analytic identities evaluated at fixed tolerances to seeded desk-scale
// Monte-Carlo comparisons. Seeds, grids, and thresholds are pinned here; the
// CLI `verify` subcommand and the acceptance test binary both run this suite.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symspec/ensembles.hpp"
#include "symspec/spectra.hpp"

namespace symspec::verify {

enum class Direction {
  BELOW,  // passes when measured <= threshold
  ABOVE   // passes when measured > threshold (negative controls)
};

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool passed = false;
  double seconds = 0.0;
  Direction direction = Direction::BELOW;
  std::string note;  // optional detail (sub-check breakdown, counts)
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall = false;

  void finalize() {
    overall = true;
    for (const auto& c : checks) overall = overall && c.passed;
  }
};

enum class Suite { ALL, ANALYTIC, MONTECARLO };

struct AcceptanceOptions {
  Suite suite = Suite::ALL;
  int workers = 1;
};

// Runs the pinned acceptance criteria; check errors are recorded as
// failures and the suite continues.
VerificationReport run_acceptance(const AcceptanceOptions& opts);

// Ordered, reproducible Monte-Carlo sampling: matrix i is generated from
// derive_stream(seed, i) and decomposed independently, so the concatenated
// records are identical for any worker count.
struct McRun {
  std::vector<spectra::SpectralRecord> records;  // ordered by matrix index
  std::vector<std::int64_t> failed_matrices;     // solver failures, run continues
};

McRun run_ensemble(const ensembles::EnsembleSpec& spec, std::int64_t matrices, int workers);

}  // namespace symspec::verify
