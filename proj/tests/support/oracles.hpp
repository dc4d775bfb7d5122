#pragma once

// Test-side oracles, kept independent of the implementation paths they
// check.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

// Q(n, x) for integer n via the closed finite sum e^{-x} sum_{k<n} x^k/k!.
inline double reg_gamma_upper_int(int n, double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < n; ++k) {
    term *= x / k;
    sum += term;
  }
  return std::exp(-x) * sum;
}

// Composite Simpson integration; deliberately a different rule family from
// the library's Gauss-Kronrod scheme.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int panels) {
  const double h = (hi - lo) / (2 * panels);
  double acc = f(lo) + f(hi);
  for (int i = 1; i < 2 * panels; ++i) acc += f(lo + h * i) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Golden-section maximizer on [lo, hi].
inline double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  for (int i = 0; i < 200; ++i) {
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - phi * (b - a);
    d = a + phi * (b - a);
  }
  return 0.5 * (a + b);
}

// Two-sample Kolmogorov-Smirnov statistic.
inline double two_sample_ks(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double sup = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) {
      ++i;
    } else {
      ++j;
    }
    sup = std::max(sup, std::abs(static_cast<double>(i) / a.size() -
                                 static_cast<double>(j) / b.size()));
  }
  return sup;
}

}  // namespace oracles
