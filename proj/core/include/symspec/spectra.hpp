#pragma once

// Dense non-Hermitian eigendecomposition and per-eigenvalue overlap
// extraction. The nonorthogonality parameter of a unit right eigenvector v
// of a complex symmetric matrix is t = 1/|v^T v|^2 - 1; the measure-zero
// event v^T v = 0 (a defective or maximally nonorthogonal pair) is flagged,
// never extrapolated.

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symspec/ensembles.hpp"

namespace symspec::spectra {

// |v^T v|^2 below this floor is reported as OVERFLOW rather than as a
// finite t; 1/y - 1 would exceed 1e120.
inline constexpr double kOverlapFloor = 1e-120;

// Pairs whose normalized residual ||Jv - zv||_2 / ||J||_F exceeds this are
// flagged defective.
inline constexpr double kResidualThreshold = 1e-10;

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::int64_t matrix_index = -1)
      : std::runtime_error(what), matrix_index_(matrix_index) {}
  std::int64_t matrix_index() const noexcept { return matrix_index_; }

 private:
  std::int64_t matrix_index_;
};

struct SpectralRecord {
  std::complex<double> z;         // eigenvalue
  double t = 0.0;                 // nonorthogonality parameter; +inf if overflowed
  bool t_overflow = false;        // |v^T v|^2 fell below kOverlapFloor
  double residual = 0.0;          // ||Jv - zv||_2 / ||J||_F
  std::int64_t matrix_index = 0;  // source matrix
  bool defective = false;         // overflowed or residual above threshold
};

struct EigenSystem {
  int n = 0;
  std::vector<std::complex<double>> values;
  std::vector<std::complex<double>> vectors;  // column-major; vector i at column i

  std::span<const std::complex<double>> vector(int i) const {
    return {vectors.data() + static_cast<std::size_t>(i) * n, static_cast<std::size_t>(n)};
  }
};

struct Overlap {
  double t = 0.0;
  bool overflow = false;
};

// Full right eigendecomposition with unit-normalized eigenvectors, via a
// Hessenberg reduction and shifted-QR (Schur) dense solver. Throws
// SolverError on non-convergence and std::domain_error on NaN/Inf input.
EigenSystem eig_right(const ensembles::ComplexMatrix& j);

// t = 1/|v^T v|^2 - 1 for a unit vector (||v|| = 1 within 1e-10 required).
Overlap overlap_from_vector(std::span<const std::complex<double>> v);

// One record per eigenvalue of j. Defective pairs are flagged and retained;
// callers exclude them from distribution fits and report the counts.
std::vector<SpectralRecord> spectral_records(const ensembles::ComplexMatrix& j,
                                             std::int64_t matrix_index);

// For symmetric J the left eigenvectors are the conjugated right ones, so
// v^T is itself a left eigenvector: returns max_i ||v_i^T J - z_i v_i^T||_2
// normalized by ||J||_F.
double left_right_check(const ensembles::ComplexMatrix& j, const EigenSystem& sys);

double frobenius_norm(const ensembles::ComplexMatrix& j);

}  // namespace symspec::spectra
