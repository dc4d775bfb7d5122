#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "support/oracles.hpp"
#include "symspec/laws_exact.hpp"
#include "symspec/specfun.hpp"

namespace sf = symspec::specfun;

TEST_CASE("ln_gamma matches factorials and high-precision references") {
  CHECK(sf::ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sf::ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  // references computed with 40-digit arithmetic
  CHECK(sf::ln_gamma(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-13));
  CHECK(sf::ln_gamma(12.25) == doctest::Approx(18.115669505710893).epsilon(1e-13));
  CHECK(sf::ln_gamma(171.5) == doctest::Approx(709.14316303092824).epsilon(1e-13));
  CHECK(sf::ln_gamma(2501.5) == doctest::Approx(17068.858194998127).epsilon(1e-13));
  CHECK(sf::ln_gamma(1e6) == doctest::Approx(12815504.569147612).epsilon(1e-13));
  CHECK(std::isfinite(sf::ln_gamma(171.5)));
  CHECK_THROWS_AS(sf::ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(sf::ln_gamma(-3.0), std::domain_error);
}

TEST_CASE("regularized incomplete gamma: examples and references") {
  for (const double a : {0.7, 1.0, 42.0, 9999.0}) {
    CHECK(sf::reg_gamma_upper(a, 0.0) == 1.0);
    CHECK(sf::reg_gamma_lower(a, 0.0) == 0.0);
  }
  // integer-shape finite-sum oracle
  CHECK(sf::reg_gamma_upper(2.0, 1.0) ==
        doctest::Approx(oracles::reg_gamma_upper_int(2, 1.0)).epsilon(1e-13));
  CHECK(oracles::reg_gamma_upper_int(2, 1.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
  for (const double x : {0.5, 2.0, 10.0}) {
    CHECK(sf::reg_gamma_upper(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-13));
  }
  for (const int n : {3, 7, 20, 151}) {
    for (const double x : {0.5, 5.0, 30.0, 140.0}) {
      CHECK(sf::reg_gamma_upper(n, x) ==
            doctest::Approx(oracles::reg_gamma_upper_int(n, x)).epsilon(5e-13));
    }
  }
  // 40-digit references across the regime split and the uniform branch
  CHECK(sf::reg_gamma_upper(3.5, 2.0) == doctest::Approx(0.77977740847571592).epsilon(1e-13));
  CHECK(sf::reg_gamma_upper(0.5, 0.3) == doctest::Approx(0.43857802608099986).epsilon(1e-13));
  CHECK(sf::reg_gamma_upper(1e4, 9800.0) == doctest::Approx(0.97779245618603031).epsilon(1e-13));
  CHECK(sf::reg_gamma_upper(2e4, 2e4) == doctest::Approx(0.49905968376625068).epsilon(1e-13));
  CHECK(sf::reg_gamma_upper(2e4, 1.9e4) == doctest::Approx(0.99999999999967631).epsilon(1e-13));
  CHECK(sf::reg_gamma_upper(1.5e4, 1.6e4) ==
        doctest::Approx(6.5861070252851482e-16).epsilon(1e-12));
  // log variants deep in the tails
  CHECK(sf::ln_reg_gamma_upper(5.0, 200.0) ==
        doctest::Approx(-181.96468470744781).epsilon(1e-13));
  CHECK(sf::ln_reg_gamma_upper(1000.0, 1500.0) ==
        doctest::Approx(-98.220568183364615).epsilon(1e-13));
  CHECK(sf::ln_reg_gamma_lower(5.0, 1e-6) ==
        doctest::Approx(-73.865045365936740).epsilon(1e-13));
  CHECK(sf::ln_reg_gamma_lower(1000.0, 600.0) ==
        doctest::Approx(-114.28593896855044).epsilon(1e-13));

  CHECK_THROWS_AS(sf::reg_gamma_upper(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(sf::reg_gamma_upper(2.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(sf::reg_gamma_lower(-2.0, 1.0), std::domain_error);
}

TEST_CASE("incomplete gamma invariants: complement and recurrence") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst_sum = 0.0;
  double worst_rec = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double a = std::exp(std::log(1.0) + u01(gen) * std::log(1e4));
    const double x = 5.0 * a * u01(gen);
    worst_sum = std::max(worst_sum,
                         std::abs(sf::reg_gamma_upper(a, x) + sf::reg_gamma_lower(a, x) - 1.0));
    // Q(a+1,x) = Q(a,x) + x^a e^{-x} / Gamma(a+1), combined in log space
    const double lq = sf::ln_reg_gamma_upper(a, x);
    const double lterm = a * std::log(x) - x - sf::ln_gamma(a + 1.0);
    const double m = std::max(lq, lterm);
    const double lhs = m + std::log(std::exp(lq - m) + std::exp(lterm - m));
    const double rhs = sf::ln_reg_gamma_upper(a + 1.0, x);
    worst_rec = std::max(worst_rec, std::abs(lhs - rhs));
  }
  CHECK(worst_sum <= 1e-14);
  CHECK(worst_rec <= 1e-11);
}

TEST_CASE("erfc and erfcx against references") {
  CHECK(sf::erfc(0.0) == 1.0);
  CHECK(sf::erfc(-1.3) == doctest::Approx(2.0 - sf::erfc(1.3)).epsilon(1e-14));
  const struct {
    double x, v;
  } erfc_refs[] = {{0.5, 0.47950012218695346}, {1.3, 0.065992055059347563},
                   {3.0, 2.2090496998585441e-5}, {7.0, 4.1838256077794144e-23},
                   {15.0, 7.2129941724512067e-100}, {26.0, 5.6631924088561428e-296}};
  for (const auto& ref : erfc_refs) {
    CHECK(sf::erfc(ref.x) == doctest::Approx(ref.v).epsilon(1e-13));
  }
  const struct {
    double x, v;
  } erfcx_refs[] = {{0.1, 0.89645697996912664},  {1.0, 0.42758357615580700},
                    {2.1, 0.24511912334517235},  {2.5, 0.21080636406114358},
                    {5.0, 0.11070463773306863},  {30.0, 0.018795888861416751},
                    {1e4, 5.6418958072680841e-5}, {1e8, 5.6418958354775626e-9}};
  for (const auto& ref : erfcx_refs) {
    CHECK(sf::erfcx(ref.x) == doctest::Approx(ref.v).epsilon(1e-13));
  }

  // leading asymptotic term, next-order oracle: erfcx(x) x sqrt(pi) =
  // 1 - 1/(2x^2) + O(x^-4)
  const double x = 1e4;
  const double lead = sf::erfcx(x) * x * std::sqrt(M_PI);
  CHECK(std::abs(lead - 1.0) <= 1e-7);
  CHECK(lead == doctest::Approx(1.0 - 0.5 / (x * x)).epsilon(1e-12));

  // scaling identity on [0, 25]
  for (int i = 0; i <= 100; ++i) {
    const double xi = 0.25 * i;
    const double lhs = sf::erfcx(xi);
    const double rhs = std::exp(xi * xi) * sf::erfc(xi);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("adaptive quadrature: analytic integrals") {
  const auto expdecay = sf::integrate([](double x) { return std::exp(-x); }, 0.0, sf::kInfinity);
  CHECK(std::abs(expdecay.value - 1.0) <= 1e-10);
  CHECK(expdecay.evaluations > 0);
  CHECK(expdecay.abs_error_estimate >= 0.0);

  const auto invsqrt =
      sf::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10, 1e-10);
  CHECK(std::abs(invsqrt.value - 2.0) <= 1e-8);

  const auto gauss = sf::integrate([](double x) { return std::exp(-x * x); }, 0.0, sf::kInfinity);
  CHECK(gauss.value == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-10));

  // radial density normalization for N=5
  const symspec::laws_exact::LawContext ctx(5);
  const auto rho = sf::integrate(
      [&](double r) { return symspec::laws_exact::radial_density(ctx, r); }, 0.0, sf::kInfinity,
      1e-10, 1e-13);
  CHECK(std::abs(rho.value - 1.0) <= 1e-8);
}

TEST_CASE("quadrature is deterministic and reports failures") {
  auto f = [](double x) { return std::cos(17.0 * x) / std::sqrt(x); };
  const auto a = sf::integrate(f, 0.0, 1.0, 1e-12, 1e-13);
  const auto b = sf::integrate(f, 0.0, 1.0, 1e-12, 1e-13);
  CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
  CHECK(a.evaluations == b.evaluations);

  CHECK_THROWS_AS(sf::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-13,
                                1e-13, 8),
                  sf::ConvergenceError);
  try {
    sf::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-13, 1e-13, 8);
  } catch (const sf::ConvergenceError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.best_estimate() == doctest::Approx(2.0).epsilon(0.05));
  }
  CHECK_THROWS_AS(sf::integrate([](double x) { return x; }, 0.0, 1.0, -1.0, 1e-12),
                  std::invalid_argument);
  CHECK_THROWS_AS(sf::integrate([](double x) { return x; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("signed log-sum tracks cancellation and signs") {
  using sf::SignedLog;
  const SignedLog terms1[] = {SignedLog::from_value(3.0), SignedLog::from_value(-2.0)};
  CHECK(sf::log_sum(terms1).value() == doctest::Approx(1.0).epsilon(1e-14));
  const SignedLog terms2[] = {SignedLog::from_value(1.5), SignedLog::from_value(-2.5)};
  const auto s2 = sf::log_sum(terms2);
  CHECK(s2.sign == -1);
  CHECK(s2.value() == doctest::Approx(-1.0).epsilon(1e-14));
  const SignedLog terms3[] = {SignedLog::from_value(2.0), SignedLog::from_value(-2.0)};
  CHECK(sf::log_sum(terms3).sign == 0);
  // huge magnitudes that only make sense in log space
  const SignedLog terms4[] = {SignedLog::from_log(1000.0), SignedLog::from_log(999.0, -1)};
  const auto s4 = sf::log_sum(terms4);
  CHECK(s4.sign == 1);
  CHECK(s4.log == doctest::Approx(1000.0 + std::log1p(-std::exp(-1.0))).epsilon(1e-14));
}
