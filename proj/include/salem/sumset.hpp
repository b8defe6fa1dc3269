#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "salem/dimension.hpp"
#include "salem/measure.hpp"

namespace salem {

// Finite description of one of the sets R, Y, Z. Interval covers a 1-d
// interval or (with endpoints a, b) a straight segment in the plane; the
// Cantor kind is the deterministic pattern of fixtures::cantor_pattern mapped
// affinely onto [offset, offset + extent] along the x-axis; CantorTree wraps
// a realized random construction and nets itself at the level whose cells
// match the requested resolution.
struct SetSpec {
  enum class Kind { Interval, Segment, Atoms, Cantor, CantorTree };
  Kind kind = Kind::Interval;
  double lo = 0.0, hi = 1.0;                      // Interval
  std::array<double, 2> a{0.0, 0.0}, b{1.0, 0.0}; // Segment endpoints
  std::vector<std::array<double, 2>> points;      // Atoms (y = 0 in 1-d)
  int base = 0;                                   // Cantor: subdivision n
  std::vector<int> digits;                        // Cantor: kept digits
  double offset = 0.0, extent = 1.0;              // Cantor: affine image
  std::shared_ptr<const CantorMeasure> tree;      // CantorTree

  static SetSpec interval(double lo, double hi);
  static SetSpec segment(std::array<double, 2> a, std::array<double, 2> b);
  static SetSpec atoms(std::vector<std::array<double, 2>> pts);
  static SetSpec cantor(int base, std::vector<int> digits, double offset, double extent);
  static SetSpec cantor_tree(std::shared_ptr<const CantorMeasure> cm);

  // Representative points at spacing <= delta/2 (2*ceil(diam/delta) per
  // dimension for continuous kinds); finite kinds return their points;
  // Cantor kinds return cell endpoints at the matching level.
  std::vector<std::array<double, 2>> net(double delta) const;
  double feature_size() const;  // smallest positive component size, inf for points
  double diameter() const;
};

struct SumsetSpec {
  SetSpec R, Y, Z;
  double delta = 1.0 / 64.0;
  int d = 1;
};

// Outer-measure proxy at resolution delta: (hit cells) * delta^d over the
// image cloud {r*y + z}. Throws ResolutionTooCoarse when delta exceeds the
// smallest input feature size.
double sumset_cover_measure(const SumsetSpec& spec);

// Same cover evaluated on one shared point cloud built at the finest delta,
// so the sequence is exactly monotone as delta shrinks. Returns (delta, cover)
// pairs in schedule order.
std::vector<std::pair<double, double>> sumset_cover_schedule(const SetSpec& R, const SetSpec& Y,
                                                             const SetSpec& Z, int d,
                                                             std::vector<double> deltas);

struct L2Report {
  std::vector<double> cutoffs;
  std::vector<double> values;      // P(c) = integral over |xi| <= c of |mu_hat nu_hat|^2
  std::vector<double> increments;  // P(c_{i+1}) - P(c_i)
  double worst_ratio = 0.0;        // max increment ratio between consecutive steps
  bool converged = false;          // geometric decay of increments
  std::string to_json() const;
};

// Cauchy proxy for membership of mu*nu's transform in L^2.
L2Report l2_density_check(const std::function<std::complex<double>(double)>& mu_hat,
                          const std::function<std::complex<double>(double)>& nu_hat,
                          const std::vector<double>& cutoff_schedule,
                          double ratio_threshold = 0.7);

// energy_fourier applied to the product transform; finiteness is the desk
// certificate for dim_H(RY+Z) >= s.
EnergyResult convolution_energy(const std::function<std::complex<double>(double)>& mu_hat,
                                const std::function<std::complex<double>(double)>& nu_hat,
                                double s, int d, double cutoff);
EnergyResult convolution_energy2(
    const std::function<std::complex<double>(double, double)>& mu_hat,
    const std::function<std::complex<double>(double, double)>& nu_hat, double s,
    double cutoff);

struct PipelineOptions {
  std::string mode = "lebesgue";  // or "hausdorff"
  double s = 0.5;                 // hausdorff mode target exponent
  int d = 1;
  double cutoff = 4096.0;
  std::vector<double> cutoff_schedule;  // lebesgue mode; defaults to doublings
  double decay_window_lo = 4.0;         // reported exponent fits
  double decay_window_hi = 1024.0;
  double ratio_threshold = 0.7;
};

// Builds mu on R*Y and nu on Z (atoms), runs the L2 proxy or the convolution
// energy in both orderings, and reports fitted exponents plus a verdict.
// Verdicts: "positive", "negative", "inconclusive".
struct PipelineReport {
  std::string verdict;
  std::string detail_json;
};
PipelineReport theorem_pipeline(const AtomMeasure& R_measure, const AtomMeasure& Y_measure,
                                const AtomMeasure& Z_measure, const PipelineOptions& opts);

}  // namespace salem
