#include "symspec/spectra.hpp"

#include <cmath>
#include <complex>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace symspec::spectra {

namespace {

bool all_finite(const ensembles::ComplexMatrix& j) {
  for (const auto& v : j.a) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace

double frobenius_norm(const ensembles::ComplexMatrix& j) {
  double s = 0.0;
  for (const auto& v : j.a) s += std::norm(v);
  return std::sqrt(s);
}

EigenSystem eig_right(const ensembles::ComplexMatrix& j) {
  const int n = j.n;
  if (n < 1) throw std::domain_error("eig_right: empty matrix");
  if (!all_finite(j)) throw std::domain_error("eig_right: matrix has NaN/Inf entries");

  // column-major copy; zgeev overwrites its input
  std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) a[static_cast<std::size_t>(c) * n + r] = j(r, c);

  EigenSystem sys;
  sys.n = n;
  sys.values.resize(n);
  sys.vectors.resize(static_cast<std::size_t>(n) * n);

  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'V', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n,
      reinterpret_cast<lapack_complex_double*>(sys.values.data()), nullptr, 1,
      reinterpret_cast<lapack_complex_double*>(sys.vectors.data()), n);
  if (info != 0) {
    throw SolverError("eig_right: zgeev failed (info=" + std::to_string(info) + ")");
  }

  // zgeev returns unit 2-norm vectors; renormalize defensively so the
  // overlap contract (||v|| = 1 within 1e-12) is ours, not the backend's
  for (int i = 0; i < n; ++i) {
    auto* col = sys.vectors.data() + static_cast<std::size_t>(i) * n;
    double norm2 = 0.0;
    for (int r = 0; r < n; ++r) norm2 += std::norm(col[r]);
    const double inv = 1.0 / std::sqrt(norm2);
    for (int r = 0; r < n; ++r) col[r] *= inv;
  }
  return sys;
}

Overlap overlap_from_vector(std::span<const std::complex<double>> v) {
  double norm2 = 0.0;
  std::complex<double> vtv = 0.0;
  for (const auto& c : v) {
    norm2 += std::norm(c);
    vtv += c * c;  // transpose product, no conjugation
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw std::domain_error("overlap_from_vector: vector is not unit-normalized");
  }
  const double y = std::norm(vtv);
  if (y < kOverlapFloor) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  return {std::max(0.0, 1.0 / y - 1.0), false};
}

std::vector<SpectralRecord> spectral_records(const ensembles::ComplexMatrix& j,
                                             std::int64_t matrix_index) {
  const int n = j.n;
  EigenSystem sys;
  try {
    sys = eig_right(j);
  } catch (const SolverError& e) {
    throw SolverError(std::string(e.what()) + " [matrix " + std::to_string(matrix_index) + "]",
                      matrix_index);
  }
  const double fnorm = frobenius_norm(j);
  const double inv_fnorm = fnorm > 0.0 ? 1.0 / fnorm : 0.0;

  std::vector<SpectralRecord> records;
  records.reserve(n);
  std::vector<std::complex<double>> jv(n);
  for (int i = 0; i < n; ++i) {
    const auto v = sys.vector(i);
    const std::complex<double> z = sys.values[i];
    for (int r = 0; r < n; ++r) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < n; ++c) acc += j(r, c) * v[c];
      jv[r] = acc - z * v[r];
    }
    double res2 = 0.0;
    for (int r = 0; r < n; ++r) res2 += std::norm(jv[r]);
    const double residual = std::sqrt(res2) * inv_fnorm;

    const Overlap o = overlap_from_vector(v);
    SpectralRecord rec;
    rec.z = z;
    rec.t = o.t;
    rec.t_overflow = o.overflow;
    rec.residual = residual;
    rec.matrix_index = matrix_index;
    rec.defective = o.overflow || residual > kResidualThreshold;
    records.push_back(rec);
  }
  return records;
}

double left_right_check(const ensembles::ComplexMatrix& j, const EigenSystem& sys) {
  const int n = j.n;
  const double fnorm = frobenius_norm(j);
  const double inv_fnorm = fnorm > 0.0 ? 1.0 / fnorm : 0.0;
  double worst = 0.0;
  std::vector<std::complex<double>> vtj(n);
  for (int i = 0; i < n; ++i) {
    const auto v = sys.vector(i);
    const std::complex<double> z = sys.values[i];
    for (int c = 0; c < n; ++c) {
      std::complex<double> acc = 0.0;
      for (int r = 0; r < n; ++r) acc += v[r] * j(r, c);
      vtj[c] = acc - z * v[c];
    }
    double dev2 = 0.0;
    for (int c = 0; c < n; ++c) dev2 += std::norm(vtj[c]);
    worst = std::max(worst, std::sqrt(dev2) * inv_fnorm);
  }
  return worst;
}

}  // namespace symspec::spectra
