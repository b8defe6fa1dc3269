#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "salem/construct.hpp"
#include "salem/measure.hpp"

namespace salem {

struct EnergySpec {
  double s = 0.5;
  int d = 1;
  double cutoff = 1e4;       // Fourier-side integration limit
  double mollify_eps = 0.0;  // direct-side diagonal clamp; 0 = report coincidences
  void validate() const;
};

struct EnergyResult {
  double value = 0.0;
  double coincident_weight = 0.0;  // mu x mu mass sitting at distance zero
  double tail_fraction = 0.0;
  std::vector<std::string> warnings;
  std::string to_json(const std::string& method, double s) const;
};

// I_s as a pair sum: sum over atom pairs of w_x w_y max(|x-y|, eps)^{-s}.
// With eps = 0, exact-coincidence pairs are excluded and reported.
// Equispaced equal-weight 1-d inputs take an O(M) distance-histogram path
// (an exact algebraic rewrite of the same sum).
EnergyResult energy_direct(const AtomMeasure& m, const EnergySpec& spec);

// c(d,s) * integral of |f(xi)|^2 |xi|^{s-d} over |xi| <= cutoff, trapezoid on
// a linear-then-log hybrid grid with an analytic head cell. Assumes
// |f(-xi)| = |f(xi)| (real measures). Throws NonconvergentTail when the last
// decade carries more than 10% of the integral and decays no faster than
// |xi|^{-1}.
EnergyResult energy_fourier(const std::function<std::complex<double>(double)>& f,
                            const EnergySpec& spec);
EnergyResult energy_fourier2(
    const std::function<std::complex<double>(double, double)>& f, const EnergySpec& spec);

// Riesz kernel constant c(d,s) = pi^{s-d/2} Gamma((d-s)/2) / Gamma(s/2).
double riesz_constant(int d, double s);

// sup of feasible s by bisection: s is feasible when the worst-case two-cell
// mass ratio 2 N_{j+1}^s / T_j does not grow across construction scales.
double hausdorff_dim_estimate(const CantorMeasure& cm);

// Decay-exponent estimate on xi = step*k inside the window; with log_correct
// the known ln^{1/2}(4 zeta0 (1+xi^2)) factor is divided out before fitting.
DecayReport fourier_dim_report(const std::function<std::complex<double>(double)>& f,
                               double window_lo, double window_hi, double step,
                               bool log_correct, double zeta0, int d = 1);
double fourier_dim_estimate(const std::function<std::complex<double>(double)>& f,
                            double window_lo, double window_hi, double step,
                            bool log_correct, double zeta0, int d = 1);

}  // namespace salem
