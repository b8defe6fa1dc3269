#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "salem/error.hpp"
#include "salem/rational.hpp"

namespace salem {

// Level-j step measure of the Cantor construction: T_j intervals
// [a, a + 1/N_j] with a = 1 + m/N_j, each carrying mass 1/T_j
// (density N_j/T_j). Offsets m are kept as exact integers so interval
// masses stay exact rationals.
struct GridMeasure {
  int level = 0;
  long long scale_den = 1;             // N_j
  long long count = 1;                 // T_j
  std::vector<long long> offsets;      // sorted, distinct, in [0, N_j)

  void validate() const;
  double left_endpoint(std::size_t i) const {
    return 1.0 + static_cast<double>(offsets[i]) / static_cast<double>(scale_den);
  }
  double cell_width() const { return 1.0 / static_cast<double>(scale_den); }
};

// Finite weighted atom list in dimension 1 or 2. Second coordinates are all
// zero when dim == 1. Immutable by convention after construction.
struct AtomMeasure {
  int dim = 1;
  std::vector<double> px, py, w;

  std::size_t size() const { return w.size(); }
  bool empty() const { return w.empty(); }
  void validate() const;
  double support_diameter() const;
  double min_abs_position() const;

  static AtomMeasure point(double x, double weight = 1.0);
  static AtomMeasure from_lists(std::vector<double> xs, std::vector<double> ws);
  void push(double x, double weight) {
    px.push_back(x);
    py.push_back(0.0);
    w.push_back(weight);
  }
  void push2(double x, double y, double weight) {
    px.push_back(x);
    py.push_back(y);
    w.push_back(weight);
  }
};

// d0 of the construction: reciprocal of the larger support diameter.
struct MeasureDiam {
  double diam_mu = 1.0;
  double diam_prod = 1.0;
  double d0 = 1.0;

  // diam_mu is the a-priori envelope [1,2] of every construction level;
  // diam_prod is the diameter of [1,2]*supp(nu).
  static MeasureDiam for_construction(const AtomMeasure* nu);
};

double total_mass(const GridMeasure& m);
double total_mass(const AtomMeasure& m);

// Exact mass of [lo, hi]; the double overload converts its (dyadic) bounds
// exactly and rounds only the final result.
Rat measure_of_interval_rat(const GridMeasure& m, const Rat& lo, const Rat& hi);
double measure_of_interval(const GridMeasure& m, double lo, double hi);

double cdf(const GridMeasure& m, double t);

// Pushforward of mu x nu under (r, y) -> r*y. mu must be one-dimensional;
// the result lives in nu's dimension. Coincident positions merge.
AtomMeasure product_measure(const AtomMeasure& mu, const AtomMeasure& nu);

// One atom per interval at its midpoint, weight 1/T_j.
AtomMeasure discretize(const GridMeasure& m);

AtomMeasure convolve(const AtomMeasure& a, const AtomMeasure& b);

std::complex<double> fourier_atoms(const AtomMeasure& m, double xi);
std::complex<double> fourier_atoms(const AtomMeasure& m, const std::array<double, 2>& xi);

// JSON round-trip (schemas: GridMeasure record, AtomMeasure pair array).
std::string grid_to_json(const GridMeasure& m);
GridMeasure grid_from_json(const std::string& text);
std::string atoms_to_json(const AtomMeasure& m);
AtomMeasure atoms_from_json(const std::string& text);

}  // namespace salem
