#include "symspec/ensembles.hpp"

#include <cmath>
#include <stdexcept>

namespace symspec::ensembles {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

void check_n(int n) {
  if (n < 2) throw std::domain_error("ensembles: requires n >= 2");
}

}  // namespace

PhiloxStream::PhiloxStream(std::uint64_t key, std::uint64_t stream_id)
    : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
      counter_{0u, 0u, static_cast<std::uint32_t>(stream_id),
               static_cast<std::uint32_t>(stream_id >> 32)} {}

void PhiloxStream::refill() {
  std::array<std::uint32_t, 4> c = counter_;
  std::array<std::uint32_t, 2> k = key_;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kPhiloxW0;
      k[1] += kPhiloxW1;
    }
    philox_round(c, k);
  }
  block_ = c;
  block_pos_ = 0;
  // bump the 64-bit block index (counter words 0 and 1)
  if (++counter_[0] == 0u) ++counter_[1];
}

std::uint64_t PhiloxStream::next_u64() {
  if (block_pos_ >= 4) refill();
  const std::uint64_t lo = block_[block_pos_];
  const std::uint64_t hi = block_[block_pos_ + 1];
  block_pos_ += 2;
  return lo | (hi << 32);
}

double PhiloxStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double PhiloxStream::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double PhiloxStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = uniform_pos();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = kTwoPi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

PhiloxStream derive_stream(std::uint64_t master_seed, std::uint64_t worker_id) {
  return PhiloxStream(master_seed, worker_id);
}

RealMatrix sample_goe(int n, PhiloxStream& rng) {
  check_n(n);
  RealMatrix x(n);
  const double off = 1.0 / std::sqrt(static_cast<double>(n));
  const double diag = std::sqrt(2.0 / n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = rng.normal() * (i == j ? diag : off);
      x(i, j) = v;
      x(j, i) = v;
    }
  }
  return x;
}

ComplexMatrix sample(const EnsembleSpec& spec, PhiloxStream& rng) {
  check_n(spec.n);
  const int n = spec.n;
  ComplexMatrix j(n);
  switch (spec.kind) {
    case EnsembleKind::AI_GAUSSIAN: {
      const RealMatrix x = sample_goe(n, rng);
      const RealMatrix y = sample_goe(n, rng);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) j(r, c) = {x(r, c), y(r, c)};
      return j;
    }
    case EnsembleKind::AI_BERNOULLI: {
      // The diagonal follows the same +-1/sqrt(N) law as the off-diagonal
      // entries; the variance mismatch with the Gaussian diagonal is O(1/N)
      // and does not affect the large-N comparisons this ensemble serves.
      const double amp = 1.0 / std::sqrt(static_cast<double>(n));
      for (int r = 0; r < n; ++r) {
        for (int c = r; c < n; ++c) {
          const std::uint64_t bits = rng.next_u64();
          const double re = (bits & 1u) ? amp : -amp;
          const double im = (bits & 2u) ? amp : -amp;
          j(r, c) = {re, im};
          j(c, r) = {re, im};
        }
      }
      return j;
    }
    case EnsembleKind::GINIBRE_COMPLEX: {
      const double scale = 1.0 / std::sqrt(static_cast<double>(n));
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          const double re = rng.normal() * scale;
          const double im = rng.normal() * scale;
          j(r, c) = {re, im};
        }
      }
      return j;
    }
    case EnsembleKind::GINIBRE_REAL: {
      const double scale = std::sqrt(2.0 / n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) j(r, c) = {rng.normal() * scale, 0.0};
      return j;
    }
  }
  throw std::invalid_argument("sample: bad ensemble kind");
}

std::vector<std::complex<double>> sample_haar_unit_vector(int n, PhiloxStream& rng) {
  check_n(n);
  std::vector<std::complex<double>> v(n);
  double norm2 = 0.0;
  for (auto& c : v) {
    const double re = rng.normal();
    const double im = rng.normal();
    c = {re, im};
    norm2 += re * re + im * im;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& c : v) c *= inv;
  return v;
}

}  // namespace symspec::ensembles
