#include "salem/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "salem/parallel.hpp"

namespace salem {

namespace {
constexpr double kPi = std::numbers::pi;

struct TailBins {
  double total = 0.0;        // integral over [lo_grid, cutoff]
  double last_decade = 0.0;  // integral over [cutoff/10, cutoff]
  double last_bin = 0.0;     // final eighth of the last decade
  double slope = 0.0;        // fitted exponent p of the integrand ~ xi^p
};

// Trapezoid over the hybrid grid for integrand(xi) on [head_h, cutoff]:
// linear spacing up to 1, log spacing above, last decade split for the tail
// diagnostics.
TailBins integrate_radial(const std::function<double(double)>& integrand, double head_h,
                          double cutoff, int pts_per_decade) {
  TailBins out;
  auto trapz = [&](double lo, double hi, std::int64_t steps) {
    if (hi <= lo) return 0.0;
    return par::map_reduce(
        steps, 1024, 0.0,
        [&](std::int64_t i0, std::int64_t i1) {
          double acc = 0.0;
          for (std::int64_t i = i0; i < i1; ++i) {
            double a = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps);
            double b = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(steps);
            acc += 0.5 * (integrand(a) + integrand(b)) * (b - a);
          }
          return acc;
        },
        std::plus<>());
  };
  auto trapz_log = [&](double lo, double hi) {
    if (hi <= lo * (1.0 + 1e-15)) return 0.0;
    double decades = std::log10(hi / lo);
    auto steps = static_cast<std::int64_t>(std::ceil(decades * pts_per_decade));
    steps = std::max<std::int64_t>(steps, 8);
    double r = std::pow(hi / lo, 1.0 / static_cast<double>(steps));
    return par::map_reduce(
        steps, 1024, 0.0,
        [&](std::int64_t i0, std::int64_t i1) {
          double acc = 0.0;
          for (std::int64_t i = i0; i < i1; ++i) {
            double a = lo * std::pow(r, static_cast<double>(i));
            double b = lo * std::pow(r, static_cast<double>(i + 1));
            acc += 0.5 * (integrand(a) + integrand(b)) * (b - a);
          }
          return acc;
        },
        std::plus<>());
  };

  double lin_hi = std::min(1.0, cutoff);
  auto lin_steps = static_cast<std::int64_t>(std::ceil((lin_hi - head_h) * 1024));
  out.total += trapz(head_h, lin_hi, std::max<std::int64_t>(lin_steps, 4));

  if (cutoff > 1.0) {
    double dec_lo = std::max(1.0, cutoff / 10.0);
    out.total += trapz_log(1.0, dec_lo);
    // last decade in 8 bins for the slope fit
    std::vector<double> bins, mids;
    double r = std::pow(cutoff / dec_lo, 1.0 / 8.0);
    for (int i = 0; i < 8; ++i) {
      double a = dec_lo * std::pow(r, i);
      double b = dec_lo * std::pow(r, i + 1);
      double v = trapz_log(a, b);
      bins.push_back(v);
      mids.push_back(std::sqrt(a * b));
      out.total += v;
      out.last_decade += v;
      if (i == 7) out.last_bin = v;
    }
    // least squares of ln(bin) vs ln(mid); bin ~ xi^{p+1} for density xi^p
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n_ok = 0;
    for (int i = 0; i < 8; ++i) {
      if (bins[i] <= 0.0) continue;
      double x = std::log(mids[i]), y = std::log(bins[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n_ok;
    }
    if (n_ok >= 2) {
      double q = (n_ok * sxy - sx * sy) / (n_ok * sxx - sx * sx);
      out.slope = q - 1.0;  // back to density exponent
    } else {
      out.slope = -std::numeric_limits<double>::infinity();
    }
  } else {
    out.slope = -std::numeric_limits<double>::infinity();
  }
  return out;
}

EnergyResult finish_radial(const TailBins& t, double head, double c_ds) {
  double raw = head + t.total;
  if (t.last_decade > 0.10 * raw && t.slope >= -1.0) {
    fail(Err::NonconvergentTail,
         "Fourier-side energy: last decade carries " +
             std::to_string(t.last_decade / raw) + " of the mass with slope " +
             std::to_string(t.slope));
  }
  EnergyResult r;
  r.value = c_ds * raw;
  double q = t.slope + 1.0;  // per-bin contributions scale like xi^q
  if (q < -1e-9 && t.last_bin > 0.0) {
    double rho = std::pow(10.0, q / 8.0);
    double tail = t.last_bin * rho / (1.0 - rho);
    r.tail_fraction = tail / (raw + tail);
  } else if (t.last_decade > 0.0) {
    r.tail_fraction = t.last_decade / raw;
    r.warnings.push_back("tail slope too flat for extrapolation");
  }
  return r;
}
}  // namespace

void EnergySpec::validate() const {
  require(d == 1 || d == 2, Err::InvalidArgument, "energy dimension must be 1 or 2");
  require(s > 0.0 && s < static_cast<double>(d), Err::InvalidExponent,
          "energy exponent must lie in (0, d)");
  require(cutoff > 0.0, Err::InvalidArgument, "cutoff must be positive");
  require(mollify_eps >= 0.0, Err::InvalidArgument, "mollify_eps must be >= 0");
}

std::string EnergyResult::to_json(const std::string& method, double s) const {
  nlohmann::ordered_json j;
  j["method"] = method;
  j["s"] = s;
  j["value"] = value;
  j["tail_fraction"] = tail_fraction;
  j["warnings"] = warnings;
  if (coincident_weight > 0.0) j["coincident_weight"] = coincident_weight;
  return j.dump();
}

EnergyResult energy_direct(const AtomMeasure& m, const EnergySpec& spec) {
  spec.validate();
  require(!m.empty(), Err::EmptyMeasure, "energy of empty measure");
  const double s = spec.s, eps = spec.mollify_eps;
  const std::size_t M = m.size();
  EnergyResult r;

  // equispaced equal-weight fast path: identical sum, grouped by distance
  bool uniform = m.dim == 1 && M >= 4 && eps == 0.0;
  if (uniform) {
    double w0 = m.w[0];
    double delta = (m.px[M - 1] - m.px[0]) / static_cast<double>(M - 1);
    if (delta <= 0.0) uniform = false;
    for (std::size_t i = 0; uniform && i < M; ++i) {
      if (std::abs(m.w[i] - w0) > 1e-15 * w0) uniform = false;
      double ideal = m.px[0] + delta * static_cast<double>(i);
      if (std::abs(m.px[i] - ideal) > 1e-12 * std::max(1.0, std::abs(ideal))) uniform = false;
    }
    if (uniform) {
      long double acc = 0.0L;
      for (std::size_t d1 = 1; d1 < M; ++d1)
        acc += static_cast<long double>(M - d1) *
               std::pow(static_cast<long double>(d1) * delta, -static_cast<long double>(s));
      double w2 = w0 * w0;
      r.value = static_cast<double>(2.0L * acc) * w2;
      for (std::size_t i = 0; i < M; ++i) r.coincident_weight += m.w[i] * m.w[i];
      if (r.coincident_weight > 0.0)
        r.warnings.push_back("coincident atom-pair mass excluded from the pair sum");
      return r;
    }
  }

  long double acc = 0.0L;
  double coincident = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = i + 1; j < M; ++j) {
      double dx = m.px[i] - m.px[j], dy = m.py[i] - m.py[j];
      double dist = m.dim == 1 ? std::abs(dx) : std::hypot(dx, dy);
      double ww = 2.0 * m.w[i] * m.w[j];
      if (dist <= 0.0) {
        if (eps > 0.0) {
          acc += ww * std::pow(eps, -s);
        } else {
          coincident += ww;
        }
      } else {
        acc += ww * std::pow(std::max(dist, eps), -s);
      }
    }
  }
  for (std::size_t i = 0; i < M; ++i) {
    if (eps > 0.0) {
      acc += m.w[i] * m.w[i] * std::pow(eps, -s);
    } else {
      coincident += m.w[i] * m.w[i];
    }
  }
  r.value = static_cast<double>(acc);
  r.coincident_weight = coincident;
  if (coincident > 0.0)
    r.warnings.push_back("coincident atom-pair mass excluded from the pair sum");
  return r;
}

double riesz_constant(int d, double s) {
  require(s > 0.0 && s < static_cast<double>(d), Err::InvalidExponent,
          "riesz_constant needs 0 < s < d");
  return std::pow(kPi, s - 0.5 * d) * std::tgamma(0.5 * (d - s)) / std::tgamma(0.5 * s);
}

EnergyResult energy_fourier(const std::function<std::complex<double>(double)>& f,
                            const EnergySpec& spec) {
  spec.validate();
  require(spec.d == 1, Err::InvalidArgument, "energy_fourier is the 1-d route");
  const double s = spec.s;
  const double h = 1.0 / 1024.0;
  auto integrand = [&](double xi) {
    return std::norm(f(xi)) * std::pow(xi, s - 1.0) * 2.0;  // both signs of xi
  };
  double head = std::norm(f(0.0)) * std::pow(h, s) / s * 2.0;
  TailBins t = integrate_radial(integrand, h, spec.cutoff, 4096);
  return finish_radial(t, head, riesz_constant(1, s));
}

EnergyResult energy_fourier2(
    const std::function<std::complex<double>(double, double)>& f, const EnergySpec& spec) {
  spec.validate();
  require(spec.d == 2, Err::InvalidArgument, "energy_fourier2 is the 2-d route");
  const double s = spec.s;
  const double h = 1.0 / 256.0;
  const int n_theta = 64;
  auto ring = [&](double rho) {
    double acc = 0.0;
    for (int i = 0; i < n_theta; ++i) {
      double th = 2.0 * kPi * static_cast<double>(i) / n_theta;
      acc += std::norm(f(rho * std::cos(th), rho * std::sin(th)));
    }
    return acc * (2.0 * kPi / n_theta);
  };
  auto integrand = [&](double rho) { return ring(rho) * std::pow(rho, s - 1.0); };
  double head = std::norm(f(0.0, 0.0)) * 2.0 * kPi * std::pow(h, s) / s;
  TailBins t = integrate_radial(integrand, h, spec.cutoff, 512);
  return finish_radial(t, head, riesz_constant(2, s));
}

double hausdorff_dim_estimate(const CantorMeasure& cm) {
  const auto& p = cm.params;
  require(p.depth >= 2, Err::InvalidArgument, "need at least two levels to fit scales");
  // worst two-cell mass at scale range j: q_j(s) = 2 N_{j+1}^s / T_j;
  // regression slope of ln q_j against ln N_{j+1} is s - alpha_hat
  std::vector<double> xs, ys;
  for (int j = 0; j < p.depth; ++j) {
    xs.push_back(std::log(static_cast<double>(p.scale(j + 1))));
    ys.push_back(std::log(2.0 / static_cast<double>(p.count(j))));
  }
  auto slope_at = [&](double s) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = static_cast<int>(xs.size());
    for (int i = 0; i < n; ++i) {
      double y = s * xs[i] + ys[i];
      sx += xs[i];
      sy += y;
      sxx += xs[i] * xs[i];
      sxy += xs[i] * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  auto feasible = [&](double s) { return slope_at(s) <= 1e-9; };
  if (feasible(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 0.005) {
    double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

DecayReport fourier_dim_report(const std::function<std::complex<double>(double)>& f,
                               double window_lo, double window_hi, double step,
                               bool log_correct, double zeta0, int d) {
  require(window_hi > window_lo && step > 0.0, Err::InvalidArgument, "bad window");
  auto k_lo = static_cast<long long>(std::ceil(window_lo / step));
  auto k_hi = static_cast<long long>(std::floor(window_hi / step));
  require(k_hi >= k_lo, Err::TooFewSamples, "empty scan window");
  std::vector<double> xi(static_cast<std::size_t>(k_hi - k_lo + 1));
  std::vector<double> vals(xi.size());
  par::run_chunks(static_cast<std::int64_t>(xi.size()), 256,
                  [&](std::size_t, std::int64_t lo, std::int64_t hi) {
                    for (std::int64_t i = lo; i < hi; ++i) {
                      double x = step * static_cast<double>(k_lo + i);
                      double v = std::abs(f(x));
                      if (log_correct)
                        v /= std::sqrt(std::log(4.0 * zeta0 * (1.0 + x * x)));
                      xi[static_cast<std::size_t>(i)] = x;
                      vals[static_cast<std::size_t>(i)] = v;
                    }
                  });
  return decay_fit(xi, vals, window_lo, window_hi, static_cast<double>(d));
}

double fourier_dim_estimate(const std::function<std::complex<double>(double)>& f,
                            double window_lo, double window_hi, double step,
                            bool log_correct, double zeta0, int d) {
  DecayReport r = fourier_dim_report(f, window_lo, window_hi, step, log_correct, zeta0, d);
  return std::min(static_cast<double>(d), r.fitted_beta);
}

}  // namespace salem
