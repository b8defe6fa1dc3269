#include "salem/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "salem/parallel.hpp"

namespace salem {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

long long checked_product(const std::vector<int>& v, int upto, const char* what) {
  __int128 acc = 1;
  for (int i = 0; i < upto; ++i) {
    acc *= v[static_cast<std::size_t>(i)];
    require(acc < (static_cast<__int128>(1) << 50), Err::ConfigError,
            std::string(what) + " product overflows the exact-arithmetic range");
  }
  return static_cast<long long>(acc);
}
}  // namespace

double zeta0_partial_sum(double d0, long long K) {
  require(d0 > 0.0 && K > 0, Err::InvalidArgument, "zeta0_partial_sum needs d0 > 0, K > 0");
  double acc = 2.0;  // k = 0
  for (long long k = 1; k <= K; ++k) {
    double kk = static_cast<double>(k);
    acc += 4.0 / (1.0 + d0 * d0 * kk * kk);  // both signs
  }
  return acc + 2.0 * (2.0 / (d0 * d0 * static_cast<double>(K)));  // tail, both sides
}

double zeta0_default(double d0) { return 1.0 + zeta0_partial_sum(d0); }

long long ConstructionParams::scale(int j) const {
  require(j >= 0 && j <= depth, Err::DepthExceeded, "scale(j) outside construction depth");
  return checked_product(branch, j, "branch");
}

long long ConstructionParams::count(int j) const {
  require(j >= 0 && j <= depth, Err::DepthExceeded, "count(j) outside construction depth");
  return checked_product(keep, j, "keep");
}

void ConstructionParams::validate() const {
  require(alpha > 0.0 && alpha <= 1.0, Err::ConfigError, "alpha must lie in (0,1]");
  require(n_star >= 2, Err::ConfigError, "n_star must be >= 2");
  require(depth >= 0, Err::ConfigError, "depth must be >= 0");
  require(static_cast<int>(branch.size()) == depth && static_cast<int>(keep.size()) == depth,
          Err::ConfigError, "branch/keep length must equal depth");
  for (int j = 0; j < depth; ++j) {
    require(branch[j] >= 2 && branch[j] <= n_star, Err::ConfigError,
            "branch factor outside [2, n_star]");
    require(keep[j] >= 1 && keep[j] <= branch[j], Err::ConfigError,
            "keep count outside [1, n_j]");
  }
  require(ratio_lo > 0.0 && ratio_hi >= ratio_lo, Err::ConfigError, "bad ratio bounds");
  for (int j = 1; j <= depth; ++j) {
    double ratio = static_cast<double>(count(j)) / std::pow(static_cast<double>(scale(j)), alpha);
    require(ratio >= ratio_lo * (1 - 1e-12) && ratio <= ratio_hi * (1 + 1e-12), Err::ConfigError,
            "T_j / N_j^alpha escapes [ratio_lo, ratio_hi] at level " + std::to_string(j));
  }
  require(d0 > 0.0, Err::ConfigError, "d0 must be positive");
  require(k_max >= 1, Err::ConfigError, "k_max must be >= 1");
  require(retry_cap >= 0, Err::ConfigError, "retry_cap must be >= 0");
  require(zeta0 > zeta0_partial_sum(d0), Err::ConfigError,
          "zeta0 must exceed sum over the d0 grid of 2/(1+d0^2 k^2)");
}

std::pair<std::vector<int>, std::vector<int>> default_sequences(double alpha, int n_star,
                                                                int depth) {
  require(alpha > 0.0 && alpha <= 1.0 && n_star >= 2 && depth >= 0, Err::InvalidArgument,
          "default_sequences arguments out of range");
  std::vector<int> branch(depth, n_star), keep;
  keep.reserve(depth);
  double log_t_prev = 0.0;  // ln T_{j-1}
  for (int j = 1; j <= depth; ++j) {
    double log_target = alpha * j * std::log(static_cast<double>(n_star)) - log_t_prev;
    int t = static_cast<int>(std::llround(std::exp(log_target)));
    t = std::clamp(t, 1, n_star);
    keep.push_back(t);
    log_t_prev += std::log(static_cast<double>(t));
  }
  return {branch, keep};
}

ConstructionParams make_params(double alpha, int n_star, int depth, std::uint64_t seed,
                               const AtomMeasure* nu) {
  ConstructionParams p;
  p.alpha = alpha;
  p.n_star = n_star;
  p.depth = depth;
  std::tie(p.branch, p.keep) = default_sequences(alpha, n_star, depth);
  p.seed = seed;
  p.d0 = MeasureDiam::for_construction(nu).d0;
  p.zeta0 = zeta0_default(p.d0);
  p.k_max = std::max<long long>(4096, 4 * p.scale(depth));
  p.retry_cap = 64;
  p.ratio_lo = 1.0 / n_star;
  p.ratio_hi = n_star;
  return p;
}

std::complex<double> term_I(double a, double b, double xi, long long scale_next) {
  return std::polar(1.0, -kTwoPi * xi * (a + b)) *
         cell_window(xi / static_cast<double>(scale_next));
}

std::complex<double> term_J(double a, double b, double xi, long long scale_next,
                            const AtomMeasure& nu) {
  require(!nu.empty(), Err::EmptyMeasure, "term_J with empty nu");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < nu.size(); ++i)
    acc += nu.w[i] * term_I(a, b, xi * nu.px[i], scale_next);
  return acc;
}

double deviation_X(const LevelFrame& f, double xi) {
  const int n = f.n_next, t = f.t_next;
  const double inv_scale = 1.0 / static_cast<double>(f.scale_next);
  std::vector<std::complex<double>> ph(static_cast<std::size_t>(n));
  std::complex<double> full{0.0, 0.0};
  for (int b = 0; b < n; ++b) {
    ph[static_cast<std::size_t>(b)] = std::polar(1.0, -kTwoPi * xi * b * inv_scale);
    full += ph[static_cast<std::size_t>(b)];
  }
  full /= static_cast<double>(n);
  std::complex<double> acc{0.0, 0.0};
  const auto& digits = *f.digits;
  for (std::size_t i = 0; i < f.offsets->size(); ++i) {
    std::complex<double> kept{0.0, 0.0};
    for (int b : digits[i]) kept += ph[static_cast<std::size_t>(b)];
    kept /= static_cast<double>(t);
    acc += std::polar(1.0, -kTwoPi * xi * f.endpoint(i)) * (kept - full);
  }
  acc /= static_cast<double>(f.parent_count());
  return std::abs(acc * cell_window(xi * inv_scale));
}

double deviation_Y(const LevelFrame& f, double xi, const AtomMeasure& nu) {
  require(!nu.empty(), Err::EmptyMeasure, "deviation_Y with empty nu");
  const int n = f.n_next, t = f.t_next;
  const double inv_scale = 1.0 / static_cast<double>(f.scale_next);
  const auto& digits = *f.digits;
  std::vector<std::complex<double>> ph(static_cast<std::size_t>(n));
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t yi = 0; yi < nu.size(); ++yi) {
    const double u = xi * nu.px[yi];
    std::complex<double> full{0.0, 0.0};
    for (int b = 0; b < n; ++b) {
      ph[static_cast<std::size_t>(b)] = std::polar(1.0, -kTwoPi * u * b * inv_scale);
      full += ph[static_cast<std::size_t>(b)];
    }
    full /= static_cast<double>(n);
    const std::complex<double> scale = nu.w[yi] * cell_window(u * inv_scale);
    std::complex<double> sum_a{0.0, 0.0};
    for (std::size_t i = 0; i < f.offsets->size(); ++i) {
      std::complex<double> kept{0.0, 0.0};
      for (int b : digits[i]) kept += ph[static_cast<std::size_t>(b)];
      kept /= static_cast<double>(t);
      sum_a += std::polar(1.0, -kTwoPi * u * f.endpoint(i)) * (kept - full);
    }
    acc += scale * sum_a;
  }
  acc /= static_cast<double>(f.parent_count());
  return std::abs(acc);
}

double hoeffding_threshold(long long count_j, double xi, double zeta0) {
  return std::sqrt(std::log(4.0 * zeta0 * (1.0 + xi * xi)) / static_cast<double>(count_j));
}

double failure_probability(long long count_j, double xi, double zeta0) {
  (void)count_j;
  return 1.0 / (zeta0 * (1.0 + xi * xi));
}

double threshold_X(long long count_j, long long scale_next, double xi, double zeta0) {
  double u = hoeffding_threshold(count_j, xi, zeta0);
  double cap = std::min(1.0, static_cast<double>(scale_next) / std::abs(xi));
  return 2.0 * u * cap;
}

double threshold_Y(long long count_j, long long scale_next, double xi, double zeta0,
                   const EnvelopeG& g, double k_phi) {
  double u = hoeffding_threshold(count_j, xi, zeta0);
  double ax = std::abs(xi);
  double direct = g(ax);
  double via_phi = (static_cast<double>(scale_next) / (kPi * ax)) * k_phi * g(0.5 * ax);
  return 2.0 * u * std::min(direct, via_phi);
}

namespace {
struct RangeStats {
  long long violations = 0;
  double max_ratio_x = 0.0;
  double max_ratio_y = 0.0;
  double implied_c0 = 0.0;
};
}  // namespace

VerifyOutcome verify_range(const LevelFrame& f, const ConstructionParams& p,
                           const NuContext* nu_ctx, long long k_lo, long long k_hi) {
  require(k_lo >= 1 && k_hi >= k_lo, Err::InvalidArgument, "bad verification range");
  const long long count_j = f.parent_count();
  const long long n_points = k_hi - k_lo + 1;

  RangeStats total = par::map_reduce(
      n_points, 64, RangeStats{},
      [&](std::int64_t lo, std::int64_t hi) {
        RangeStats s;
        for (std::int64_t i = lo; i < hi; ++i) {
          const double xi = p.d0 * static_cast<double>(k_lo + i);
          const double dev_x = deviation_X(f, xi);
          const double thr_x = threshold_X(count_j, f.scale_next, xi, p.zeta0);
          double rx = dev_x / thr_x;
          s.max_ratio_x = std::max(s.max_ratio_x, rx);
          if (rx > 1.0) ++s.violations;
          if (nu_ctx != nullptr) {
            const double dev_y = deviation_Y(f, xi, *nu_ctx->nu);
            const double thr_y =
                threshold_Y(count_j, f.scale_next, xi, p.zeta0, *nu_ctx->g, nu_ctx->k_phi);
            double ry = dev_y / thr_y;
            s.max_ratio_y = std::max(s.max_ratio_y, ry);
            if (ry > 1.0) ++s.violations;
            double u = hoeffding_threshold(count_j, xi, p.zeta0);
            double g_form = 2.0 * u * (*nu_ctx->g)(0.5 * xi) *
                            std::min(1.0, static_cast<double>(f.scale_next) / xi);
            s.implied_c0 = std::max(s.implied_c0, dev_y / g_form);
          }
        }
        return s;
      },
      [](RangeStats a, const RangeStats& b) {
        a.violations += b.violations;
        a.max_ratio_x = std::max(a.max_ratio_x, b.max_ratio_x);
        a.max_ratio_y = std::max(a.max_ratio_y, b.max_ratio_y);
        a.implied_c0 = std::max(a.implied_c0, b.implied_c0);
        return a;
      });

  VerifyOutcome out;
  out.violations = total.violations;
  out.accepted = total.violations == 0;
  out.max_ratio_x = total.max_ratio_x;
  out.max_ratio_y = total.max_ratio_y;
  out.implied_c0 = total.implied_c0;
  return out;
}

VerifyOutcome verify_level(const LevelFrame& f, const ConstructionParams& p,
                           const NuContext* nu_ctx) {
  return verify_range(f, p, nu_ctx, 1, p.k_max);
}

std::vector<long long> CantorMeasure::offsets_at(int j) const {
  require(j >= 0 && j <= params.depth, Err::DepthExceeded,
          "requested level exceeds construction depth");
  std::vector<long long> offsets{0};
  for (int lev = 0; lev < j; ++lev) {
    const Level& L = levels[static_cast<std::size_t>(lev)];
    std::vector<long long> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(L.t));
    for (std::size_t i = 0; i < offsets.size(); ++i)
      for (int b : L.digit_sets[i]) next.push_back(offsets[i] * L.n + b);
    offsets = std::move(next);
  }
  return offsets;
}

GridMeasure CantorMeasure::level_measure(int j) const {
  GridMeasure m;
  m.level = j;
  m.scale_den = params.scale(j);
  m.count = params.count(j);
  m.offsets = offsets_at(j);
  m.validate();
  return m;
}

void CantorMeasure::validate() const {
  params.validate();
  require(static_cast<int>(levels.size()) == params.depth, Err::InvalidArgument,
          "level count != depth");
  long long parents = 1;
  for (int j = 0; j < params.depth; ++j) {
    const Level& L = levels[static_cast<std::size_t>(j)];
    require(L.n == params.branch[j] && L.t == params.keep[j], Err::InvalidArgument,
            "stored level arity disagrees with params");
    require(static_cast<long long>(L.digit_sets.size()) == parents, Err::InvalidArgument,
            "digit set count != |A_j|");
    for (const auto& ds : L.digit_sets) {
      require(static_cast<int>(ds.size()) == L.t, Err::InvalidArgument,
              "|B_{j+1,a}| != t_{j+1}");
      for (std::size_t i = 0; i < ds.size(); ++i) {
        require(ds[i] >= 0 && ds[i] < L.n, Err::InvalidArgument, "digit outside [n]");
        if (i > 0)
          require(ds[i - 1] < ds[i], Err::InvalidArgument, "digits not strictly increasing");
      }
    }
    parents *= L.t;
  }
}

CantorMeasure construct(const ConstructionParams& p, const AtomMeasure* nu) {
  p.validate();
  std::optional<EnvelopeG> g;
  NuContext ctx;
  if (nu != nullptr) {
    require(!nu->empty(), Err::EmptyMeasure, "construct with empty nu");
    double x_needed = std::max(64.0, 2.0 * p.d0 * static_cast<double>(p.k_max));
    g.emplace(*nu, 1e3, 64, x_needed);
    ctx.nu = nu;
    ctx.g = &*g;
    ctx.k_phi = phi_envelope(*nu, *g);
  }

  CantorMeasure cm;
  cm.params = p;
  std::vector<long long> offsets{0};
  for (int j = 0; j < p.depth; ++j) {
    const int n = p.branch[j], t = p.keep[j];
    const long long scale_j = p.scale(j);
    const long long scale_next = p.scale(j + 1);

    if (t == n) {
      // full refinement: X_a and Y_a vanish identically
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int b = 0; b < n; ++b) all[static_cast<std::size_t>(b)] = b;
      cm.levels.push_back({n, t, std::vector<std::vector<int>>(offsets.size(), all)});
      cm.certificates.push_back({j + 1, 0.0, 0.0, 0, 0.0});
    } else {
      bool accepted = false;
      for (int attempt = 0; attempt < p.retry_cap && !accepted; ++attempt) {
        std::vector<std::vector<int>> digits(offsets.size());
        for (std::size_t i = 0; i < offsets.size(); ++i) {
          Rng rng = Rng::substream(p.seed, static_cast<std::uint64_t>(j + 1),
                                   static_cast<std::uint64_t>(attempt), i);
          digits[i] = random_subset(t, n, rng);
        }
        LevelFrame f{j, scale_j, scale_next, n, t, &offsets, &digits};
        VerifyOutcome out = verify_level(f, p, nu != nullptr ? &ctx : nullptr);
        if (out.accepted) {
          cm.certificates.push_back(
              {j + 1, out.max_ratio_x, out.max_ratio_y, attempt, out.implied_c0});
          cm.levels.push_back({n, t, std::move(digits)});
          accepted = true;
        }
      }
      require(accepted, Err::RetryExhausted,
              "digit-set retries exhausted at level " + std::to_string(j + 1));
    }

    const auto& L = cm.levels.back();
    std::vector<long long> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < offsets.size(); ++i)
      for (int b : L.digit_sets[i]) next.push_back(offsets[i] * n + b);
    offsets = std::move(next);
  }
  return cm;
}

CantorMeasure construct_fixed(const ConstructionParams& p, const std::vector<int>& digits) {
  p.validate();
  std::vector<int> ds = digits;
  std::sort(ds.begin(), ds.end());
  CantorMeasure cm;
  cm.params = p;
  long long parents = 1;
  for (int j = 0; j < p.depth; ++j) {
    require(static_cast<int>(ds.size()) == p.keep[j], Err::InvalidArgument,
            "fixed digit set size != t_{j+1}");
    for (int b : ds)
      require(b >= 0 && b < p.branch[j], Err::InvalidArgument, "fixed digit outside [n]");
    cm.levels.push_back(
        {p.branch[j], p.keep[j],
         std::vector<std::vector<int>>(static_cast<std::size_t>(parents), ds)});
    parents *= p.keep[j];
  }
  return cm;
}

double frostman_ratio(const CantorMeasure& cm, int num_samples, Rng& rng) {
  const GridMeasure mJ = cm.level_measure(cm.params.depth);
  const double alpha = cm.params.alpha;
  const int max_e =
      static_cast<int>(std::ceil(std::log2(static_cast<double>(mJ.scale_den)))) + 1;
  double best = 0.0;
  for (int s = 0; s < num_samples; ++s) {
    int e = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_e + 1)));
    double len = std::ldexp(1.0, -e);
    double c = (1.0 - len) + rng.next_unit() * (1.0 + 2.0 * len);
    double mass = measure_of_interval(mJ, c - 0.5 * len, c + 0.5 * len);
    if (mass > 0.0) best = std::max(best, mass / std::pow(len, alpha));
  }
  return best;
}

namespace {
nlohmann::ordered_json params_to_json(const ConstructionParams& p) {
  nlohmann::ordered_json j;
  j["alpha"] = p.alpha;
  j["n_star"] = p.n_star;
  j["branch"] = p.branch;
  j["keep"] = p.keep;
  j["depth"] = p.depth;
  j["zeta0"] = p.zeta0;
  j["d0"] = p.d0;
  j["k_max"] = p.k_max;
  j["seed"] = p.seed;
  j["retry_cap"] = p.retry_cap;
  j["ratio_lo"] = p.ratio_lo;
  j["ratio_hi"] = p.ratio_hi;
  return j;
}

ConstructionParams params_from_json(const nlohmann::json& j) {
  ConstructionParams p;
  p.alpha = j.at("alpha").get<double>();
  p.n_star = j.at("n_star").get<int>();
  p.branch = j.at("branch").get<std::vector<int>>();
  p.keep = j.at("keep").get<std::vector<int>>();
  p.depth = j.at("depth").get<int>();
  p.zeta0 = j.at("zeta0").get<double>();
  p.d0 = j.at("d0").get<double>();
  p.k_max = j.at("k_max").get<long long>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.retry_cap = j.at("retry_cap").get<int>();
  p.ratio_lo = j.at("ratio_lo").get<double>();
  p.ratio_hi = j.at("ratio_hi").get<double>();
  return p;
}
}  // namespace

std::string cantor_to_json(const CantorMeasure& cm) {
  nlohmann::ordered_json j;
  j["params"] = params_to_json(cm.params);
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& L : cm.levels) {
    nlohmann::ordered_json lev;
    lev["n"] = L.n;
    lev["t"] = L.t;
    lev["digit_sets"] = L.digit_sets;
    j["levels"].push_back(std::move(lev));
  }
  j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& c : cm.certificates) {
    nlohmann::ordered_json cert;
    cert["level"] = c.level;
    cert["max_slack_X"] = c.max_slack_x;
    cert["max_slack_Y"] = c.max_slack_y;
    j["certificates"].push_back(std::move(cert));
  }
  return j.dump();
}

CantorMeasure cantor_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  CantorMeasure cm;
  cm.params = params_from_json(j.at("params"));
  for (const auto& lev : j.at("levels")) {
    CantorMeasure::Level L;
    L.n = lev.at("n").get<int>();
    L.t = lev.at("t").get<int>();
    L.digit_sets = lev.at("digit_sets").get<std::vector<std::vector<int>>>();
    cm.levels.push_back(std::move(L));
  }
  for (const auto& cert : j.at("certificates")) {
    LevelCertificate c;
    c.level = cert.at("level").get<int>();
    c.max_slack_x = cert.at("max_slack_X").get<double>();
    c.max_slack_y = cert.at("max_slack_Y").get<double>();
    cm.certificates.push_back(c);
  }
  cm.validate();
  return cm;
}

}  // namespace salem
