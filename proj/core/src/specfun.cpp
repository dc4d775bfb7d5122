#include "symspec/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace symspec::specfun {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kLnSqrt2Pi = 0.9189385332046727417803297364056;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

// ---------------------------------------------------------------------------
// ln Gamma: Stirling-de Moivre series after shifting the argument above 10.
// ---------------------------------------------------------------------------

// B_{2n} / (2n (2n-1)) for the asymptotic tail of ln Gamma.
constexpr double kStirling[8] = {
    1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

// Sum of the Stirling correction series at z >= 10; this equals
// ln GammaStar(z) = ln[ Gamma(z) / (sqrt(2 pi) z^{z-1/2} e^{-z}) ].
double stirling_tail(double z) {
  const double w = 1.0 / (z * z);
  double sum = kStirling[7];
  for (int i = 6; i >= 0; --i) sum = sum * w + kStirling[i];
  return sum / z;
}

}  // namespace

double ln_gamma(double a) {
  if (!(a > 0.0)) throw std::domain_error("ln_gamma: requires a > 0");
  double shift = 0.0;
  double z = a;
  while (z < 10.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return (z - 0.5) * std::log(z) - z + kLnSqrt2Pi + stirling_tail(z) - shift;
}

SignedLog log_sum(std::span<const SignedLog> terms) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    if (t.sign != 0 && t.log > m) m = t.log;
  }
  if (std::isinf(m) && m < 0) return {};
  double acc = 0.0;
  for (const auto& t : terms) {
    if (t.sign != 0) acc += t.sign * std::exp(t.log - m);
  }
  if (acc == 0.0) return {};
  return {m + std::log(std::abs(acc)), acc > 0 ? 1 : -1};
}

// ---------------------------------------------------------------------------
// erfc / erfcx
// ---------------------------------------------------------------------------

double erfc(double x) { return std::erfc(x); }

namespace {

// Laplace continued fraction for erfcx, accurate for x >= 2.2.
double erfcx_cf(double x) {
  // erfcx(x) = (1/sqrt(pi)) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  // evaluated bottom-up with enough rungs for 1e-15 at x >= 2.2.
  double f = 0.0;
  for (int n = 60; n >= 1; --n) {
    f = (0.5 * n) / (x + f);
  }
  return 1.0 / (kSqrtPi * (x + f));
}

}  // namespace

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x >= 1e7) {
    // two-term asymptotic series; next term is O(x^-5)
    const double ix = 1.0 / x;
    return ix / kSqrtPi * (1.0 - 0.5 * ix * ix);
  }
  if (x >= 2.2) return erfcx_cf(x);
  if (x >= 0.0) return std::exp(x * x) * std::erfc(x);
  // reflection; overflows to +inf for x <~ -27, which is the honest value
  return 2.0 * std::exp(x * x) - erfcx(-x);
}

// ---------------------------------------------------------------------------
// Regularized incomplete gamma functions.
//
// Three regimes:
//   x < a+1          lower series
//   x >= a+1         upper continued fraction (modified Lentz)
//   a > 1e4 and the transition window |eta| <= 1   uniform expansion
// where eta is the standard saddle coordinate, eta^2/2 = lam - 1 - ln lam,
// lam = x/a. The uniform branch keeps the slow-converging central zone out
// of the series/CF paths; outside the window those converge quickly.
// ---------------------------------------------------------------------------

namespace {

constexpr double kUniformShapeThreshold = 1e4;
constexpr double kUniformEtaWindow = 1.0;
constexpr int kMaxGammaIter = 20000;

// Coefficient functions of the uniform expansion,
//   Q(a, a*lam) = erfc(eta sqrt(a/2))/2
//               + e^{-a eta^2/2} / (sqrt(2 pi a) GammaStar(a)) * sum_k p_k(eta)/a^k,
// as Taylor polynomials in eta about 0 (radius of convergence 2 sqrt(pi),
// used only on |eta| <= 1). Generated exactly by series inversion of the
// saddle map and repeated integration by parts.
constexpr double kTemmeP0[] = {
    -0.333333333333333333,   0.0833333333333333333,   -0.0148148148148148148,
    0.00115740740740740741,  0.0003527336860670194,   -0.000178755144032921811,
    0.0000391926317852243778, -2.18544851067999216e-6, -1.85406221071515996e-6,
    8.29671134095308601e-7,  -1.76659527368260793e-7, 6.70785354340149858e-9,
    1.0261809784240308e-8,   -4.38203601845335319e-9, 9.14769958223679023e-10,
    -2.55141939949462498e-11, -5.83077213255042507e-11, 2.43619480206674162e-11,
    -5.02766928011417559e-12, 1.10043920319561348e-13, 3.37176326240098538e-13,
    -1.39238872241816207e-13, 2.85348938070474432e-14, -5.13911183424257262e-16,
    -1.97522882943494428e-15, 8.09952115670456133e-16, -1.65225312163981618e-16};
constexpr double kTemmeP1[] = {
    -0.0296296296296296296,  0.00347222222222222222,  0.0014109347442680776,
    -0.000893775720164609053, 0.000235155790711346267, -0.0000152981395747599451,
    -0.0000148324976857212797, 7.4670402068577774e-6,  -1.76659527368260793e-6,
    7.37863889774164844e-8,  1.23141717410883697e-7,  -5.69664682398935914e-8,
    1.28067794151315063e-8,  -3.82712909924193747e-10, -9.32923541208068011e-10,
    4.14153116351346076e-10, -9.04980470420551606e-11, 2.09083448607166561e-12,
    6.74352652480197076e-12, -2.92401631707814034e-12, 6.2776766375504375e-13,
    -1.1819957218757917e-14, -4.74054919064386628e-14, 2.02488028917614033e-14,
    -4.29585811626352207e-15, 6.83246612631929874e-17, 3.27234312679668144e-16};
constexpr double kTemmeP2[] = {
    0.0028218694885361552,   -0.00268132716049382716, 0.000940623162845385068,
    -0.0000764906978737997257, -0.0000889949861143276781, 0.0000522692814480044418,
    -0.0000141327621894608634, 6.64077500796748359e-7, 1.23141717410883697e-6,
    -6.26631150638829506e-7, 1.53681352981578076e-7,  -4.9752678290145187e-9,
    -1.30609295769129522e-8, 6.21229674527019114e-9,  -1.44796875267288257e-9,
    3.55441862632183153e-11, 1.21383477446435474e-10, -5.55563100244846664e-11,
    1.2555353275100875e-11,  -2.48219101593916257e-13, -1.04292082194165058e-12,
    4.65722466510512277e-13, -1.0310059479032453e-13, 1.70811653157982469e-15,
    8.50809212967137176e-15, -3.73493901000943957e-15, 8.14726588960723918e-16};
constexpr double kTemmeP3[] = {
    0.00188124632569077014,  -0.000229472093621399177, -0.000355979944457310712,
    0.000261346407240022209, -0.0000847965731367651807, 4.64854250557723852e-6,
    9.85133739287069572e-6,  -5.63968035574946555e-6, 1.53681352981578076e-6,
    -5.47279461191597057e-8, -1.56731154922955426e-7, 8.07598576885124848e-8,
    -2.0271562537420356e-8,  5.3316279394827473e-10,  1.94213563914296758e-9,
    -9.44457270416239329e-10, 2.2599635895181575e-10, -4.71616293028440889e-12,
    -2.08584164388330116e-11, 9.78017179672075781e-12, -2.26821308538713965e-12,
    3.92866802263359678e-14, 2.04194211112112922e-13, -9.33734752502359891e-14,
    2.11828913129788219e-14, -3.13912163304800622e-16, -1.87332909205631438e-15};

double horner(const double* c, int n, double x) {
  double s = c[n - 1];
  for (int i = n - 2; i >= 0; --i) s = s * x + c[i];
  return s;
}

void check_gamma_domain(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw std::domain_error("incomplete gamma: requires a > 0 and x >= 0");
  }
}

// ln P(a,x) by the lower series; valid for x < a+1.
double ln_p_series(double a, double x) {
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  double sum = 1.0, term = 1.0;
  for (int n = 1; n < kMaxGammaIter; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return a * std::log(x) - x - ln_gamma(a + 1.0) + std::log(sum);
}

// ln Q(a,x) by the upper continued fraction (modified Lentz); valid x >= a+1.
double ln_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxGammaIter; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return a * std::log(x) - x - ln_gamma(a) + std::log(h);
}

struct PQ {
  double p, q;      // regularized lower/upper values, p + q == 1
  double ln_p, ln_q;
};

// Uniform large-shape branch; requires |eta| <= kUniformEtaWindow.
PQ gamma_pq_uniform(double a, double lam) {
  const double half_eta2 = lam - 1.0 - std::log(lam);
  const double eta = (lam >= 1.0 ? 1.0 : -1.0) * std::sqrt(2.0 * half_eta2);
  const double z = eta * std::sqrt(0.5 * a);
  const double ia = 1.0 / a;
  double s = horner(kTemmeP3, 27, eta);
  s = s * ia + horner(kTemmeP2, 27, eta);
  s = s * ia + horner(kTemmeP1, 27, eta);
  s = s * ia + horner(kTemmeP0, 27, eta);
  // C such that Q = erfc(z)/2 + e^{-z^2} C; GammaStar(a) = exp(stirling_tail(a))
  const double c_corr = s / (std::sqrt(2.0 * kPi * a) * std::exp(stirling_tail(a)));
  PQ r{};
  if (eta >= 0.0) {
    const double qx = 0.5 * erfcx(z) + c_corr;  // q = e^{-z^2} qx
    r.ln_q = -z * z + std::log(qx);
    r.q = std::exp(r.ln_q);
    r.p = 1.0 - r.q;
    r.ln_p = std::log1p(-r.q);
  } else {
    const double px = 0.5 * erfcx(-z) - c_corr;  // p = e^{-z^2} px
    r.ln_p = -z * z + std::log(px);
    r.p = std::exp(r.ln_p);
    r.q = 1.0 - r.p;
    r.ln_q = std::log1p(-r.p);
  }
  return r;
}

PQ gamma_pq(double a, double x) {
  check_gamma_domain(a, x);
  PQ r{};
  if (x == 0.0) {
    r.p = 0.0;
    r.q = 1.0;
    r.ln_p = -std::numeric_limits<double>::infinity();
    r.ln_q = 0.0;
    return r;
  }
  if (a > kUniformShapeThreshold) {
    const double lam = x / a;
    const double half_eta2 = lam - 1.0 - std::log(lam);
    if (2.0 * half_eta2 <= kUniformEtaWindow * kUniformEtaWindow) {
      return gamma_pq_uniform(a, lam);
    }
  }
  if (x < a + 1.0) {
    r.ln_p = ln_p_series(a, x);
    r.p = std::exp(r.ln_p);
    r.q = 1.0 - r.p;
    r.ln_q = r.p < 0.999 ? std::log1p(-r.p) : std::log(r.q);
    return r;
  }
  r.ln_q = ln_q_cf(a, x);
  r.q = std::exp(r.ln_q);
  r.p = 1.0 - r.q;
  r.ln_p = r.q < 0.999 ? std::log1p(-r.q) : std::log(r.p);
  return r;
}

}  // namespace

double reg_gamma_upper(double a, double x) { return gamma_pq(a, x).q; }
double reg_gamma_lower(double a, double x) { return gamma_pq(a, x).p; }
double ln_reg_gamma_upper(double a, double x) { return gamma_pq(a, x).ln_q; }
double ln_reg_gamma_lower(double a, double x) { return gamma_pq(a, x).ln_p; }

}  // namespace symspec::specfun
