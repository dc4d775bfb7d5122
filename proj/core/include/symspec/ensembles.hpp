#pragma once

// Reproducible samplers for the random-matrix ensembles and Haar unit
// vectors, built on a counter-based (Philox-style) generator so that worker
// substreams derive from (master_seed, stream_id) without coordination.
//
// Reproducibility contract: the raw bit stream of a (seed, id) pair is a
// pure function of integer arithmetic and is identical across platforms.
// Gaussian variates use Box-Muller on 53-bit uniforms; their values are
// deterministic for a given build but may differ in the last ulp across
// libm implementations.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace symspec::ensembles {

enum class EnsembleKind { AI_GAUSSIAN, AI_BERNOULLI, GINIBRE_COMPLEX, GINIBRE_REAL };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::AI_GAUSSIAN;
  int n = 2;
  std::uint64_t master_seed = 0;
};

// Counter-based stream: Philox 4x32 with 10 rounds. The 64-bit stream id
// occupies half of the counter block, so 2^64 independent streams are
// available per seed, each 2^64 blocks long.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t key, std::uint64_t stream_id);

  std::uint64_t next_u64();
  // uniform on [0, 1), 53-bit resolution
  double uniform01();
  // uniform on (0, 1]; safe as a log argument
  double uniform_pos();
  // standard normal via Box-Muller; draws are consumed in pairs
  double normal();

 private:
  void refill();
  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> counter_;
  std::array<std::uint32_t, 4> block_{};
  int block_pos_ = 4;  // empty
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// Substream derivation: same (seed, id) gives the identical stream on every
// run and platform; distinct ids give statistically independent streams.
PhiloxStream derive_stream(std::uint64_t master_seed, std::uint64_t worker_id);

struct RealMatrix {
  int n = 0;
  std::vector<double> a;  // row-major
  explicit RealMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;  // row-major
  explicit ComplexMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
  std::complex<double>& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const std::complex<double>& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
};

// GOE sample normalized so <X_nm X_kl> = (delta_nk delta_ml + delta_nl
// delta_mk)/N: off-diagonal variance 1/N, diagonal variance 2/N. Exactly
// symmetric by construction. Entries are drawn row-major over i <= j.
RealMatrix sample_goe(int n, PhiloxStream& rng);

// Draws one matrix of the requested ensemble. All ensembles share the
// normalization that puts the spectral edge at r = sqrt(2):
//   AI_GAUSSIAN      J = X + iY, X and Y independent GOE as above
//   AI_BERNOULLI     Re and Im of each entry (i <= j, mirrored) are
//                    +-1/sqrt(N) with equal probability; the diagonal uses
//                    the same law, see note in ensembles.cpp
//   GINIBRE_COMPLEX  independent entries, E|J_ij|^2 = 2/N
//   GINIBRE_REAL     independent real entries, E J_ij^2 = 2/N
ComplexMatrix sample(const EnsembleSpec& spec, PhiloxStream& rng);

// Uniform (Haar) vector on the complex unit sphere.
std::vector<std::complex<double>> sample_haar_unit_vector(int n, PhiloxStream& rng);

}  // namespace symspec::ensembles
