#include "salem/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "salem/parallel.hpp"

namespace salem {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}
}  // namespace

std::complex<double> cell_window(double xi_over_scale) {
  double u = kPi * xi_over_scale;
  return std::polar(sinc(u), -u);
}

std::complex<double> fourier_grid(const GridMeasure& m, double xi) {
  std::complex<double> acc{0.0, 0.0};
  double inv_n = m.cell_width();
  for (long long off : m.offsets)
    acc += std::polar(1.0, -kTwoPi * xi * (1.0 + static_cast<double>(off) * inv_n));
  acc /= static_cast<double>(m.count);
  return acc * cell_window(xi * inv_n);
}

std::complex<double> fourier_product(const GridMeasure& m, const AtomMeasure& nu, double xi) {
  require(!nu.empty(), Err::EmptyMeasure, "fourier_product with empty nu");
  require(nu.dim == 1, Err::InvalidArgument, "fourier_product needs 1-d nu");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < nu.size(); ++i)
    acc += nu.w[i] * fourier_grid(m, nu.px[i] * xi);
  return acc;
}

EnvelopeG::EnvelopeG(const AtomMeasure& nu, double t_max, int pts_per_decade, double x_max)
    : nu_(nu), t_max_(t_max), x_max_(x_max) {
  require(!nu.empty(), Err::EmptyMeasure, "envelope of empty measure");
  require(nu.dim == 1, Err::InvalidArgument, "envelope needs 1-d nu");
  require(t_max >= 1.0 && pts_per_decade >= 2 && x_max > 0.0, Err::InvalidArgument,
          "bad envelope parameters");

  std::vector<double> tgrid;
  int t_steps = static_cast<int>(std::ceil(std::log10(t_max) * pts_per_decade));
  tgrid.reserve(t_steps + 2);
  for (int i = 0; i <= t_steps; ++i)
    tgrid.push_back(std::min(t_max, std::pow(10.0, static_cast<double>(i) / pts_per_decade)));

  xs_.push_back(0.0);
  double x_min = 1e-3;
  int x_steps = static_cast<int>(std::ceil(std::log10(x_max / x_min) * pts_per_decade));
  for (int i = 0; i <= x_steps; ++i)
    xs_.push_back(std::min(x_max, x_min * std::pow(10.0, static_cast<double>(i) / pts_per_decade)));
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());

  vals_.assign(xs_.size(), 0.0);
  par::run_chunks(static_cast<std::int64_t>(xs_.size()), 16,
                  [&](std::size_t, std::int64_t lo, std::int64_t hi) {
                    for (std::int64_t k = lo; k < hi; ++k) {
                      double x = xs_[static_cast<std::size_t>(k)];
                      double sup = 0.0;
                      for (double t : tgrid)
                        sup = std::max(sup, std::abs(fourier_atoms(nu_, t * x)));
                      vals_[static_cast<std::size_t>(k)] = 1.0 / std::sqrt(1.0 + x) + sup;
                    }
                  });
  for (std::size_t i = vals_.size(); i-- > 1;)
    vals_[i - 1] = std::max(vals_[i - 1], vals_[i]);
}

double EnvelopeG::operator()(double x) const {
  require(x >= 0.0, Err::InvalidArgument, "envelope argument must be nonnegative");
  if (x >= xs_.back()) return vals_.back();
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  return vals_[i - 1];  // left grid point: upper bound, keeps monotonicity
}

double phi_envelope(const AtomMeasure& nu, const EnvelopeG& g, double scan_hi) {
  require(!nu.empty(), Err::EmptyMeasure, "phi_envelope of empty measure");
  require(nu.dim == 1, Err::InvalidArgument, "phi_envelope needs 1-d nu");
  require(nu.min_abs_position() >= 1e-9, Err::SupportContainsZero,
          "phi_envelope: support touches zero");

  // phi nu has signed weights w/y; evaluate its transform directly.
  auto phi_nu_hat = [&](double x) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < nu.size(); ++i)
      acc += std::polar(nu.w[i] / nu.px[i], -kTwoPi * nu.px[i] * x);
    return std::abs(acc);
  };

  std::vector<double> scan;
  for (double x = 0.0; x <= 8.0; x += 1.0 / 16.0) scan.push_back(x);
  int steps = static_cast<int>(std::ceil(std::log10(scan_hi / 8.0) * 64));
  for (int i = 1; i <= steps; ++i)
    scan.push_back(std::min(scan_hi, 8.0 * std::pow(10.0, static_cast<double>(i) / 64)));

  double best = par::map_reduce(
      static_cast<std::int64_t>(scan.size()), 64, 0.0,
      [&](std::int64_t lo, std::int64_t hi) {
        double m = 0.0;
        for (std::int64_t k = lo; k < hi; ++k) {
          double x = scan[static_cast<std::size_t>(k)];
          m = std::max(m, phi_nu_hat(x) / g(0.5 * x));
        }
        return m;
      },
      [](double a, double b) { return std::max(a, b); });
  return best;
}

std::string DecayReport::to_json() const {
  nlohmann::ordered_json j;
  j["window"] = {window_lo, window_hi};
  j["fitted_C"] = fitted_C;
  j["fitted_beta"] = fitted_beta;
  j["n_samples"] = grid.size();
  return j.dump();
}

DecayReport decay_fit(const std::vector<double>& xi, const std::vector<double>& absval,
                      double window_lo, double window_hi, double beta_max) {
  require(xi.size() == absval.size(), Err::InvalidArgument, "sample length mismatch");
  DecayReport r;
  r.window_lo = window_lo;
  r.window_hi = window_hi;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (xi[i] >= window_lo && xi[i] <= window_hi) idx.push_back(i);
  require(idx.size() >= 32, Err::TooFewSamples, "decay_fit needs >= 32 samples in window");
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xi[a] < xi[b]; });
  for (std::size_t i : idx) {
    r.grid.push_back(xi[i]);
    r.values.push_back(std::abs(absval[i]));
  }

  std::vector<double> env(r.values);
  for (std::size_t i = env.size(); i-- > 1;) env[i - 1] = std::max(env[i - 1], env[i]);

  // "Attained at small xi": the leftmost arg-max of env * (1+xi)^{beta/2}
  // sits in the lower half of the window (log scale). The weighted sequence
  // tilts rightward as beta grows, so the predicate is monotone and
  // bisection applies.
  const double geo_mid = std::sqrt(r.grid.front() * r.grid.back());
  auto weighted_max = [&](double beta) {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < env.size(); ++i) {
      double w = env[i] * std::pow(1.0 + r.grid[i], 0.5 * beta);
      if (w > best * (1.0 + 1e-12)) {
        best = w;
        arg = i;
      }
    }
    return std::pair<double, std::size_t>{best, arg};
  };
  auto ok = [&](double beta) { return r.grid[weighted_max(beta).second] <= geo_mid; };

  double lo = 0.0;
  if (ok(beta_max)) {
    lo = beta_max;
  } else {
    double hi = beta_max;
    while (hi - lo > 1e-3) {
      double mid = 0.5 * (lo + hi);
      (ok(mid) ? lo : hi) = mid;
    }
  }
  r.fitted_beta = lo;
  r.fitted_C = weighted_max(lo).first;  // global max, so domination is built in
  return r;
}

double bessel_j0(double x) {
  x = std::abs(x);
  if (x <= 12.0) {
    // ascending series in long double; worst cancellation ~ e^12/(pi x)
    long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k <= 64; ++k) {
      term *= -q / (static_cast<long double>(k) * k);
      sum += term;
      if (std::abs(static_cast<double>(term)) < 1e-20 * (1.0 + std::abs(static_cast<double>(sum))))
        break;
    }
    return static_cast<double>(sum);
  }
  // Hankel asymptotic expansion, truncated near its smallest term:
  //   J0(x) = sqrt(2/(pi x)) [ P(x) cos(x - pi/4) - Q(x) sin(x - pi/4) ]
  //   P = sum_m (-1)^m a_{2m} x^{-2m},  Q = sum_m (-1)^m a_{2m+1} x^{-2m-1}
  // with a_0 = 1, a_k = a_{k-1} * (-(2k-1)^2) / (8k).
  long double lx = x;
  long double a = 1.0L;
  long double xk = 1.0L;
  long double P = 1.0L, Q = 0.0L;
  long double prev_mag = 1.0L;
  for (int k = 1; k <= 48; ++k) {
    a *= -static_cast<long double>(2 * k - 1) * (2 * k - 1) / (8.0L * k);
    xk *= lx;
    long double ck = a / xk;
    long double mag = std::abs(ck);
    if (mag > prev_mag) break;  // past the optimal truncation point
    prev_mag = mag;
    if (k % 2 == 1) {
      Q += ck * (((k - 1) / 2) % 2 == 0 ? 1.0L : -1.0L);
    } else {
      P += ck * ((k / 2) % 2 == 0 ? 1.0L : -1.0L);
    }
    if (mag < 1e-20L) break;
  }
  long double chi = lx - 0.25L * std::numbers::pi_v<long double>;
  long double amp = std::sqrt(2.0L / (std::numbers::pi_v<long double> * lx));
  return static_cast<double>(amp * (P * std::cos(chi) - Q * std::sin(chi)));
}

double circle_sigma_hat(double xi_norm) {
  require(xi_norm >= 0.0, Err::InvalidArgument, "xi_norm must be nonnegative");
  return kTwoPi * bessel_j0(kTwoPi * xi_norm);
}

double weighted_circle_product_hat(const AtomMeasure& mu, double xi_norm) {
  require(!mu.empty(), Err::EmptyMeasure, "weighted_circle_product_hat of empty measure");
  require(mu.dim == 1, Err::InvalidArgument, "radial measure must be 1-d");
  double acc = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    require(mu.px[i] > 0.0, Err::NonpositiveRadius, "radius must be positive");
    acc += mu.w[i] * std::sqrt(mu.px[i]) * circle_sigma_hat(mu.px[i] * xi_norm);
  }
  return acc;
}

}  // namespace salem
