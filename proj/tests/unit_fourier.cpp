#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "oracles.hpp"
#include "salem/fixtures.hpp"
#include "salem/fourier.hpp"
#include "salem/rng.hpp"

using namespace salem;

namespace {
constexpr double kPi = std::numbers::pi;

GridMeasure level0() {
  GridMeasure m;
  m.offsets = {0};
  return m;
}

GridMeasure random_grid(Rng& rng, int level, long long scale) {
  GridMeasure m;
  m.level = level;
  m.scale_den = scale;
  std::vector<long long> kept;
  for (long long o = 0; o < scale; ++o)
    if (rng.next_unit() < 0.4) kept.push_back(o);
  if (kept.empty()) kept.push_back(static_cast<long long>(rng.next_below(scale)));
  m.offsets = kept;
  m.count = static_cast<long long>(kept.size());
  return m;
}
}  // namespace

TEST_CASE("fourier_grid closed form") {
  GridMeasure m0 = level0();
  CHECK(std::abs(fourier_grid(m0, 0.0) - std::complex<double>(1.0, 0.0)) < 1e-15);
  // | integral of e^{-pi i x} over [1,2] | = 2/pi
  CHECK(std::abs(fourier_grid(m0, 0.5)) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
  for (int k = 1; k <= 5; ++k) CHECK(std::abs(fourier_grid(m0, k)) < 1e-12);
}

TEST_CASE("fourier_grid agrees with quadrature of the step density") {
  Rng rng(31);
  for (int it = 0; it < 12; ++it) {
    GridMeasure m = random_grid(rng, 2, 16);
    double xi = 200.0 * rng.next_unit() - 100.0;
    auto exact = fourier_grid(m, xi);
    auto quad = oracle::grid_transform_quadrature(m, xi);
    CHECK(std::abs(exact - quad) < 1e-8);
  }
}

TEST_CASE("fourier_product") {
  Rng rng(37);
  GridMeasure m = random_grid(rng, 2, 16);
  AtomMeasure d1 = AtomMeasure::point(1.0);
  for (int it = 0; it < 10; ++it) {
    double xi = 40.0 * rng.next_unit() - 20.0;
    CHECK(fourier_product(m, d1, xi) == fourier_grid(m, xi));  // identity pushforward
  }
  AtomMeasure nu = AtomMeasure::from_lists({1.0, 1.5, 2.0}, {0.2, 0.5, 0.3});
  CHECK(std::abs(fourier_product(m, nu, 0.0) - std::complex<double>(1.0, 0.0)) < 1e-14);

  // midpoint-rule gap against the discretized product path
  for (int it = 0; it < 20; ++it) {
    double xi = 12.0 * rng.next_unit() - 6.0;
    auto exact = fourier_product(m, nu, xi);
    auto approx = fourier_atoms(product_measure(discretize(m), nu), xi);
    double moment = 0.0;
    for (std::size_t i = 0; i < nu.size(); ++i) moment += nu.w[i] * std::abs(nu.px[i]);
    double bound = 2.0 * kPi * std::abs(xi) * moment / (2.0 * static_cast<double>(m.scale_den));
    CHECK(std::abs(exact - approx) <= bound + 1e-15);
  }
}

TEST_CASE("envelope g: point mass") {
  AtomMeasure d1 = AtomMeasure::point(1.0);
  EnvelopeG g(d1, 1e3, 32, 1e4);
  // |nu_hat| == 1 everywhere, so g(x) = (1+x)^{-1/2} + 1
  for (double x : {0.0, 0.5, 3.0, 40.0, 900.0})
    CHECK(g(x) == doctest::Approx(1.0 / std::sqrt(1.0 + x) + 1.0).epsilon(1e-2));
  CHECK(g(0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(g(-1.0), Error);
}

TEST_CASE("envelope g: monotone, lower-bounded, mass at zero") {
  AtomMeasure nu = AtomMeasure::from_lists({1.0, 1.25, 1.75}, {0.5, 0.25, 0.25});
  EnvelopeG g(nu, 1e3, 32, 2e3);
  CHECK(g(0.0) == doctest::Approx(1.0 + total_mass(nu)).epsilon(1e-12));
  Rng rng(41);
  for (int it = 0; it < 200; ++it) {
    double x1 = 1500.0 * rng.next_unit();
    double x2 = 1500.0 * rng.next_unit();
    if (x1 > x2) std::swap(x1, x2);
    CHECK(g(x1) >= g(x2));
    CHECK(g(x1) >= 1.0 / std::sqrt(1.0 + x1));
  }
}

TEST_CASE("envelope g on uniform nets: fine net decays, coarse net aliases") {
  // fine enough that no alias of the net enters [x, t_max * x]
  AtomMeasure fine = fixtures::uniform_net(1.0, 2.0, 1 << 17);
  EnvelopeG g_fine(fine, 1e3, 32, 256.0);
  CHECK(g_fine(100.0) <= 0.2);

  // a 256-atom net rebounds to |nu_hat| = 1 at frequency 256, inside the
  // sup's range {t x : t >= 1} for x = 100; the true sup there is ~1
  AtomMeasure coarse = fixtures::uniform_net(1.0, 2.0, 256);
  CHECK(std::abs(fourier_atoms(coarse, 256.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("phi envelope") {
  AtomMeasure d1 = AtomMeasure::point(1.0);
  EnvelopeG g1(d1, 1e3, 32, 1e4);
  double k1 = phi_envelope(d1, g1);
  // |(phi nu)^| == 1 and g >= 1, so K_phi = sup 1/g(x/2) just below 1
  CHECK(k1 > 0.9);
  CHECK(k1 <= 1.0 + 1e-12);

  AtomMeasure d2w2 = AtomMeasure::point(2.0, 2.0);
  EnvelopeG g2(d2w2, 1e3, 32, 1e4);
  double k2 = phi_envelope(d2w2, g2);
  CHECK(k2 > 0.0);

  // scan stability for a two-atom fixture
  AtomMeasure two = AtomMeasure::from_lists({1.0, 2.0}, {0.5, 0.5});
  EnvelopeG gt(two, 1e3, 32, 1e4);
  double ka = phi_envelope(two, gt, 2048.0);
  double kb = phi_envelope(two, gt, 4096.0);
  CHECK(std::abs(kb - ka) / ka < 0.10);

  AtomMeasure zero = AtomMeasure::point(0.0);
  CHECK_THROWS_AS(phi_envelope(zero, gt), Error);
}

TEST_CASE("head product transform obeys the phi-envelope bound") {
  // |(mu_0 . nu)^(xi)| = |(phi nu)^(xi) - (phi nu)^(2 xi)| / (2 pi |xi|), so
  // (1 + |xi|) / g(|xi|/2) times it stays below K_phi once |xi| >= 1
  GridMeasure m0 = level0();
  AtomMeasure nu = AtomMeasure::from_lists({1.0, 1.4, 2.0}, {0.4, 0.3, 0.3});
  EnvelopeG g(nu, 1e3, 64, 4e3);
  double k_phi = phi_envelope(nu, g);
  double worst = 0.0;
  for (double xi = 1.0; xi <= 1e3; xi *= 1.11)
    worst = std::max(worst,
                     std::abs(fourier_product(m0, nu, xi)) * (1.0 + xi) / g(0.5 * xi));
  CHECK(worst <= k_phi);
}

TEST_CASE("decay_fit") {
  std::vector<double> xi, v_pow, v_flat, v_log;
  double zeta0 = 7.3066961898743247;
  for (int k = 1; k <= 512; ++k) {
    double x = std::pow(10.0, 4.0 * k / 512.0);  // log grid on [1, 1e4]
    xi.push_back(x);
    v_pow.push_back(std::pow(1.0 + x, -0.5));
    v_flat.push_back(1.0);
    v_log.push_back(std::pow(1.0 + x, -0.5) *
                    std::sqrt(std::log(4.0 * zeta0 * (1.0 + x * x))));
  }
  DecayReport pow_fit = decay_fit(xi, v_pow, 1.0, 1e4, 2.0);
  CHECK(pow_fit.fitted_beta == doctest::Approx(1.0).epsilon(2e-3));
  for (std::size_t i = 0; i < pow_fit.grid.size(); ++i)
    CHECK(pow_fit.values[i] <=
          pow_fit.fitted_C * std::pow(1.0 + pow_fit.grid[i], -0.5 * pow_fit.fitted_beta) *
              (1 + 1e-9));

  DecayReport flat_fit = decay_fit(xi, v_flat, 1.0, 1e4, 2.0);
  CHECK(flat_fit.fitted_beta == doctest::Approx(0.0).epsilon(1e-12));

  DecayReport log_fit = decay_fit(xi, v_log, 1.0, 1e4, 2.0);
  CHECK(log_fit.fitted_beta >= 0.8);
  CHECK(log_fit.fitted_beta <= 1.0);

  // scale covariance
  std::vector<double> v_scaled(v_pow);
  for (double& v : v_scaled) v *= 37.5;
  DecayReport scaled = decay_fit(xi, v_scaled, 1.0, 1e4, 2.0);
  CHECK(scaled.fitted_beta == doctest::Approx(pow_fit.fitted_beta).epsilon(1e-3));
  CHECK(scaled.fitted_C == doctest::Approx(37.5 * pow_fit.fitted_C).epsilon(1e-12));

  std::vector<double> few_x(xi.begin(), xi.begin() + 10);
  std::vector<double> few_v(v_pow.begin(), v_pow.begin() + 10);
  CHECK_THROWS_AS(decay_fit(few_x, few_v, 1.0, 1e4, 2.0), Error);
}

TEST_CASE("bessel j0 against the integral-representation oracle") {
  Rng rng(43);
  for (int it = 0; it < 200; ++it) {
    double x = 2000.0 * rng.next_unit();
    CHECK(std::abs(bessel_j0(x) - oracle::bessel_j0(x)) < 1e-9);
  }
  // crossover region gets extra attention
  for (double x = 10.0; x <= 14.0; x += 0.125)
    CHECK(std::abs(bessel_j0(x) - oracle::bessel_j0(x)) < 1e-12);
  // libm as a second independent reference
  for (double x : {0.5, 5.0, 25.0, 400.0, 1337.0})
    CHECK(std::abs(bessel_j0(x) - j0(x)) < 1e-9);
}

TEST_CASE("circle transform") {
  CHECK(circle_sigma_hat(0.0) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  // frozen from a high-precision evaluation of 2 pi J0(10 pi)
  CHECK(circle_sigma_hat(5.0) == doctest::Approx(0.62989557613125388).epsilon(1e-9));
  CHECK_THROWS_AS(circle_sigma_hat(-1.0), Error);
}

TEST_CASE("circle transform satisfies the Bessel ODE") {
  // residual of x f'' + f' + (2 pi)^2 x f, central differences
  const double h = 1e-4;
  for (double x = 0.5; x <= 32.0; x += 0.37) {
    double f0 = circle_sigma_hat(x);
    double fp = circle_sigma_hat(x + h), fm = circle_sigma_hat(x - h);
    double d1 = (fp - fm) / (2.0 * h);
    double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    double residual = x * d2 + d1 + (2.0 * kPi) * (2.0 * kPi) * x * f0;
    double scale = (2.0 * kPi) * (2.0 * kPi) * x * (2.0 / std::sqrt(std::max(1.0, x)));
    CHECK(std::abs(residual) / scale < 1e-5);
  }
}

TEST_CASE("weighted circle product transform") {
  AtomMeasure d1 = AtomMeasure::point(1.0);
  for (double x : {0.5, 3.0, 17.0})
    CHECK(weighted_circle_product_hat(d1, x) ==
          doctest::Approx(circle_sigma_hat(x)).epsilon(1e-15));

  AtomMeasure mu = AtomMeasure::from_lists({1.0, 2.0}, {0.5, 0.5});
  double mass_half = 0.5 * (1.0 + std::sqrt(2.0));
  CHECK(weighted_circle_product_hat(mu, 0.0) ==
        doctest::Approx(2.0 * kPi * mass_half).epsilon(1e-14));

  // leading stationary-phase term: |xi|^{-1/2} 2 Re( e^{-i pi/4} conj(mu_hat(|xi|)) )
  auto leading = [&](double x) {
    std::complex<double> mu_hat = fourier_atoms(mu, x);
    std::complex<double> c2 = std::polar(1.0, -kPi / 4.0);
    return 2.0 * (c2 * std::conj(mu_hat)).real() / std::sqrt(x);
  };
  for (double x = 8.0; x <= 1024.0; x *= 1.37) {
    double resid = std::abs(weighted_circle_product_hat(mu, x) - leading(x));
    CHECK(resid <= 5.0 * std::pow(x, -1.5));
  }

  AtomMeasure bad = AtomMeasure::point(-1.0);
  CHECK_THROWS_AS(weighted_circle_product_hat(bad, 1.0), Error);
}
