#pragma once

#include "salem/construct.hpp"
#include "salem/measure.hpp"

namespace salem::fixtures {

// M equally weighted atoms at cell midpoints of [lo, hi].
AtomMeasure uniform_net(double lo, double hi, int count);

// Deterministic self-similar pattern (digits kept out of [n] at every level)
// on the base interval [1, 2], returned as the depth-level natural measure.
// digits = {0, 2}, n = 3 gives the middle-thirds measure.
CantorMeasure cantor_pattern(int n, const std::vector<int>& digits, int depth,
                             double alpha_hint = 0.0);

// Atom discretization of the pattern's natural measure at its full depth.
AtomMeasure cantor_pattern_atoms(int n, const std::vector<int>& digits, int depth);

}  // namespace salem::fixtures
