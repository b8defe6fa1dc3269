#pragma once

#include <complex>
#include <vector>

#include "salem/measure.hpp"

namespace salem {

// Transform of the unit-box window at relative frequency r = xi/N:
// N * integral of exp(-2 pi i x xi) over [0, 1/N]  =  exp(-i pi r) sinc(pi r).
// Value 1 at r = 0.
std::complex<double> cell_window(double xi_over_scale);

// Exact closed form for the step density: (1/T_j) sum_a e^{-2 pi i a xi} * window.
std::complex<double> fourier_grid(const GridMeasure& m, double xi);

// Transform of mu_j * nu for atomic nu: sum_y w_y * fourier_grid(m, y*xi).
std::complex<double> fourier_product(const GridMeasure& m, const AtomMeasure& nu, double xi);

// Decay envelope g(x) = (1+x)^{-1/2} + sup{ |nu_hat(tx)| : |t| >= 1 }.
// The sup is truncated to a log-spaced grid on [1, t_max] (negative t covered
// by |nu_hat(-u)| = |nu_hat(u)| for real nu) and the result is monotonized by
// a running maximum from the right, so lookups are non-increasing in x.
class EnvelopeG {
public:
  EnvelopeG(const AtomMeasure& nu, double t_max = 1e3, int pts_per_decade = 64,
            double x_max = 2e4);

  double operator()(double x) const;  // x < 0 -> InvalidArgument
  double t_max() const { return t_max_; }
  double x_max() const { return x_max_; }
  const AtomMeasure& nu() const { return nu_; }

private:
  AtomMeasure nu_;
  double t_max_;
  double x_max_;
  std::vector<double> xs_, vals_;
};

// Fitted constant K_phi with |(phi nu)^(x)| <= K_phi * g(x/2) on the scan
// window, where phi nu has atom weights w/y (exact on supp(nu), which must
// avoid zero). Empirical stand-in for the uncomputed proof constant.
double phi_envelope(const AtomMeasure& nu, const EnvelopeG& g, double scan_hi = 2048.0);

struct DecayReport {
  std::vector<double> grid;    // xi values inside the window, ascending
  std::vector<double> values;  // |transform| samples
  double fitted_C = 0.0;
  double fitted_beta = 0.0;    // |value| <= C (1+|xi|)^{-beta/2} on the window
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::string to_json() const;
};

// Largest beta (within 1e-3, bisection) such that the running-max envelope of
// |value| * (1+|xi|)^{beta/2} is attained at the smallest grid xi; fitted_C is
// that attained maximum. Needs >= 32 samples in the window.
DecayReport decay_fit(const std::vector<double>& xi, const std::vector<double>& absval,
                      double window_lo, double window_hi, double beta_max = 4.0);

double bessel_j0(double x);

// Transform of arclength measure on the unit circle: 2 pi J0(2 pi |xi|).
// Power series for small argument, asymptotic expansion for large.
double circle_sigma_hat(double xi_norm);

// Radial transform of mu0 * sigma with d mu0(r) = r^{1/2} d mu(r), d = 2:
// sum_r w_r r^{1/2} sigma_hat(r |xi|). All radii must be positive.
double weighted_circle_product_hat(const AtomMeasure& mu, double xi_norm);

}  // namespace salem
