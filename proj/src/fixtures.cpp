#include "salem/fixtures.hpp"

#include <cmath>

namespace salem::fixtures {

AtomMeasure uniform_net(double lo, double hi, int count) {
  require(count >= 1 && hi > lo, Err::InvalidArgument, "bad uniform net");
  AtomMeasure m;
  double h = (hi - lo) / count;
  double w = 1.0 / count;
  for (int i = 0; i < count; ++i) m.push(lo + (i + 0.5) * h, w);
  return m;
}

CantorMeasure cantor_pattern(int n, const std::vector<int>& digits, int depth,
                             double alpha_hint) {
  require(n >= 2 && !digits.empty() && depth >= 0, Err::InvalidArgument,
          "bad cantor pattern");
  int t = static_cast<int>(digits.size());
  double alpha = alpha_hint > 0.0
                     ? alpha_hint
                     : std::log(static_cast<double>(t)) / std::log(static_cast<double>(n));
  ConstructionParams p;
  p.alpha = alpha;
  p.n_star = n;
  p.depth = depth;
  p.branch.assign(depth, n);
  p.keep.assign(depth, t);
  p.d0 = 1.0;
  p.zeta0 = zeta0_default(1.0);
  p.k_max = 1;
  p.seed = 0;
  p.retry_cap = 1;
  // T_j / N_j^alpha = t^j / n^{j alpha} = 1 exactly when alpha = log t / log n
  p.ratio_lo = 0.5;
  p.ratio_hi = 2.0;
  return construct_fixed(p, digits);
}

AtomMeasure cantor_pattern_atoms(int n, const std::vector<int>& digits, int depth) {
  return discretize(cantor_pattern(n, digits, depth).level_measure(depth));
}

}  // namespace salem::fixtures
