#include "symspec/laws_asymptotic.hpp"

#include <cmath>
#include <stdexcept>

namespace symspec::laws_asymptotic {

namespace testing {
bool flip_edge_profile_sign = false;
}

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;
constexpr double kSqrtHalfPi = 1.2533141373155002512078826424055;  // sqrt(pi/2)

using specfun::erfc;
using specfun::erfcx;

double theta_ai(double s) {
  double second;
  if (s >= 0.0) {
    // erfc(-s/2) bounded; the growing e^{s^2/4} erfc(s/sqrt2) product becomes
    // e^{-s^2/4} erfcx(s/sqrt2)
    const double ex = erfcx(s / kSqrt2);
    second = (1.0 / (2.0 * kSqrt2)) * erfc(-0.5 * s) * std::exp(-0.25 * s * s) *
             (1.0 - kSqrtHalfPi * 0.5 * s * ex);
  } else {
    // erfc(-s/2) decays; pull its Gaussian into the growing factors
    const double exa = erfcx(-0.5 * s);
    const double exb = erfcx(-s / kSqrt2);
    second = (1.0 / (2.0 * kSqrt2)) *
             (exa * std::exp(-0.5 * s * s) -
              kSqrtHalfPi * 0.5 * s * exa * (2.0 - std::exp(-0.5 * s * s) * exb));
  }
  if (testing::flip_edge_profile_sign) second = -second;
  return 0.25 * erfc(s / kSqrt2) + second;
}

double theta_gin_complex(double s) { return 0.5 * erfc(s / kSqrt2); }

double theta_gin_real(double s) {
  return 0.5 * (erfc(s / kSqrt2) + (1.0 + erfc(0.5 * s)) / kSqrt2 * std::exp(-0.25 * s * s));
}

void require_sigma(double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("edge law: requires sigma > 0");
}

}  // namespace

double edge_profile(EnsembleTag tag, double s) {
  switch (tag) {
    case EnsembleTag::AI_DAGGER: return theta_ai(s);
    case EnsembleTag::GINIBRE_REAL: return theta_gin_real(s);
    case EnsembleTag::GINIBRE_COMPLEX: return theta_gin_complex(s);
  }
  throw std::invalid_argument("edge_profile: bad tag");
}

double density_large_n(int n, double r) {
  if (n < 2) throw std::domain_error("density_large_n: requires N >= 2");
  if (!(r >= 0.0)) throw std::domain_error("density_large_n: requires r >= 0");
  const double s = std::sqrt(static_cast<double>(n)) * (0.5 * r * r - 1.0);
  return r * theta_ai(s);
}

double bulk_overlap_mean(double r) {
  if (!(r >= 0.0) || r * r >= 2.0) {
    throw std::domain_error("bulk law: defined for 0 <= r < sqrt(2)");
  }
  return 0.5 * (1.0 - 0.5 * r * r);
}

double bulk_overlap_law(double r, double tau) {
  const double m = bulk_overlap_mean(r);
  if (!(tau > 0.0)) throw std::domain_error("bulk law: requires tau > 0");
  return m * m / (tau * tau * tau) * std::exp(-m / tau);
}

double bulk_overlap_cdf(double r, double tau) {
  const double m = bulk_overlap_mean(r);
  if (!(tau > 0.0)) throw std::domain_error("bulk law: requires tau > 0");
  return (1.0 + m / tau) * std::exp(-m / tau);
}

double edge_overlap_law(EnsembleTag tag, double s, double sigma) {
  require_sigma(sigma);
  const double is = 1.0 / sigma;
  switch (tag) {
    case EnsembleTag::AI_DAGGER: {
      double bracket;
      if (s >= 0.0) {
        bracket = std::exp(-0.5 * s * s) *
                  (std::sqrt(2.0 / kPi) * (is - s) + (1.0 - s * is + s * s) * erfcx(s / kSqrt2));
      } else {
        bracket = std::sqrt(2.0 / kPi) * (is - s) * std::exp(-0.5 * s * s) +
                  (1.0 - s * is + s * s) * erfc(s / kSqrt2);
      }
      const double pref = std::exp(-0.25 * is * is + 0.5 * s * is);
      return pref * bracket / (8.0 * theta_ai(s) * sigma * sigma * sigma);
    }
    case EnsembleTag::GINIBRE_REAL: {
      double bracket;
      if (s >= 0.0) {
        bracket = std::exp(-0.5 * s * s) *
                  (1.0 / std::sqrt(2.0 * kPi) + 0.5 * (1.0 - s * sigma) * is * erfcx(s / kSqrt2));
      } else {
        bracket = std::exp(-0.5 * s * s) / std::sqrt(2.0 * kPi) +
                  0.5 * (1.0 - s * sigma) * is * erfc(s / kSqrt2);
      }
      const double pref = std::exp(-0.25 * is * is + 0.5 * s * is);
      return pref * bracket / (2.0 * theta_gin_real(s) * sigma * sigma);
    }
    case EnsembleTag::GINIBRE_COMPLEX: {
      const double a = 2.0 + s * is - is * is;
      const double b = 3.0 * s - (1.0 - s * s) * is - s * is * is;
      const double c = 0.5 * ((s - is) * (s - is) - 1.0);
      double bracket;
      if (s >= 0.0) {
        const double ex = erfcx(s / kSqrt2);
        bracket = std::exp(-s * s) *
                  (a / kPi - b * ex / std::sqrt(2.0 * kPi) + c * ex * ex);
      } else {
        const double e = erfc(s / kSqrt2);
        bracket = a * std::exp(-s * s) / kPi -
                  b * std::exp(-0.5 * s * s) / std::sqrt(2.0 * kPi) * e + c * e * e;
      }
      const double pref = std::exp(-0.5 * is * is + s * is);
      return pref * bracket / (2.0 * theta_gin_complex(s) * sigma * sigma * sigma);
    }
  }
  throw std::invalid_argument("edge_overlap_law: bad tag");
}

double refined_edge_factor(int n, double s, double sigma) {
  if (n < 2) throw std::domain_error("refined_edge_factor: requires N >= 2");
  require_sigma(sigma);
  const double rtn = std::sqrt(static_cast<double>(n));
  return (0.5 / sigma) * (rtn + (s - 1.0 / sigma) / (1.0 + 1.0 / (rtn * sigma)));
}

double edge_overlap_law_refined(int n, double s, double sigma) {
  const double leading =
      0.5 * std::sqrt(static_cast<double>(n)) / sigma + 0.5 * s / sigma - 0.5 / (sigma * sigma);
  const double delta = refined_edge_factor(n, s, sigma) - leading;
  return edge_overlap_law(EnsembleTag::AI_DAGGER, s, sigma) * std::exp(delta);
}

namespace oracle {

double asymptotic_piece(PieceKind kind, Regime regime, int n, double coord, double coord2) {
  if (n < 2) throw std::domain_error("asymptotic_piece: requires N >= 2");
  const double nd = n;
  const bool bulk = regime == Regime::BULK;
  auto require_bulk_p = [&](double p) {
    if (!(p >= 0.0 && p < 1.0)) {
      throw std::domain_error("asymptotic_piece: bulk coordinate p must lie in [0,1)");
    }
  };
  switch (kind) {
    case PieceKind::K:
      if (bulk) {
        require_bulk_p(coord);
        return 0.5 * nd * (std::log(coord) - coord);
      }
      return -0.5 * nd - 0.25 * coord * coord;
    case PieceKind::GAMMA_LOWER:
      if (bulk) {
        require_bulk_p(coord);
        return 0.5 * (nd + 3.0) * std::log(coord) - 0.5 * nd * coord - std::log1p(-coord);
      }
      // scaled by (N/2)^{(N+2)/2}: the printed (N/2)^{(N+1)/2} scale is short
      // one factor sqrt(N/2) against the exact gamma function
      {
        const double s = coord;
        const double ln_erfc = s >= 0.0 ? std::log(erfc(-0.5 * s))
                                        : -0.25 * s * s + std::log(erfcx(-0.5 * s));
        return 0.5 * std::log(0.5 * nd) - 0.5 * nd + std::log(kSqrtHalfPi) + ln_erfc;
      }
    case PieceKind::GAMMA_UPPER:
      if (bulk) {
        require_bulk_p(coord);
        return 1.0;
      }
      return 0.5 * erfc(coord / kSqrt2);
    case PieceKind::P0: {
      if (!(coord > 0.0)) throw std::domain_error("asymptotic_piece: P0 coordinate must be > 0");
      if (bulk) {
        const double tau = coord;
        return -std::log(4.0 * nd) - 3.0 * std::log(tau) - 0.5 / tau;
      }
      const double sig = coord;
      return 0.5 * std::log(nd) - std::log(4.0) - 3.0 * std::log(sig) -
             0.5 * std::sqrt(nd) / sig + 0.25 / (sig * sig);
    }
    case PieceKind::EXP_FACTOR: {
      if (std::isnan(coord2)) {
        throw std::invalid_argument("asymptotic_piece: EXP_FACTOR needs coord2 (tau or sigma)");
      }
      if (!(coord2 > 0.0)) throw std::domain_error("asymptotic_piece: coord2 must be > 0");
      if (bulk) {
        require_bulk_p(coord);
        return -0.5 * coord / coord2;
      }
      const double s = coord, sig = coord2;
      return 0.5 * std::sqrt(nd) / sig + 0.5 * s / sig - 0.5 / (sig * sig);
    }
  }
  throw std::invalid_argument("asymptotic_piece: bad kind");
}

}  // namespace oracle

}  // namespace symspec::laws_asymptotic
