#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "salem/fourier.hpp"
#include "salem/measure.hpp"
#include "salem/rng.hpp"

namespace salem {

// Smallest certified value of zeta0 for the check grid d0*Z: partial sum of
// 2/(1+d0^2 k^2) over |k| <= K plus the integral tail bound 2/(d0^2 K) per
// side, plus 1 for headroom.
double zeta0_partial_sum(double d0, long long K = 1'000'000);
double zeta0_default(double d0);

struct ConstructionParams {
  double alpha = 0.5;
  int n_star = 4;
  std::vector<int> branch;  // n_j, j = 1..depth
  std::vector<int> keep;    // t_j, j = 1..depth
  int depth = 0;            // J
  double zeta0 = 0.0;
  double d0 = 1.0;
  long long k_max = 4096;
  std::uint64_t seed = 0;
  int retry_cap = 64;
  double ratio_lo = 0.0;  // bounds for T_j / N_j^alpha
  double ratio_hi = 0.0;

  long long scale(int j) const;  // N_j
  long long count(int j) const;  // T_j
  void validate() const;         // throws ConfigError on violated invariants
};

// n_j = n_star; t_j = clamp(round(N_j^alpha / T_{j-1}), 1, n_j).
std::pair<std::vector<int>, std::vector<int>> default_sequences(double alpha, int n_star,
                                                                int depth);

// Fully populated params with defaults: sequences from default_sequences,
// d0 from the support envelopes, zeta0 = zeta0_default, k_max = max(4096, 4 N_J).
ConstructionParams make_params(double alpha, int n_star, int depth, std::uint64_t seed,
                               const AtomMeasure* nu = nullptr);

// I(a,b,j,xi) in closed form: e^{-2 pi i xi (a+b)} * cell_window(xi / N_{j+1}).
std::complex<double> term_I(double a, double b, double xi, long long scale_next);

// J(a,b,j,xi) for atomic nu: sum_y w_y * term_I evaluated at frequency xi*y.
std::complex<double> term_J(double a, double b, double xi, long long scale_next,
                            const AtomMeasure& nu);

// Snapshot of one level of the digit tree while it is being verified.
struct LevelFrame {
  int j = 0;                                       // parent level
  long long scale_j = 1;                           // N_j
  long long scale_next = 1;                        // N_{j+1}
  int n_next = 0;                                  // n_{j+1}
  int t_next = 0;                                  // t_{j+1}
  const std::vector<long long>* offsets = nullptr; // A_j as integer offsets
  const std::vector<std::vector<int>>* digits = nullptr;  // B_{j+1,a} per a

  long long parent_count() const { return static_cast<long long>(offsets->size()); }
  double endpoint(std::size_t i) const {
    return 1.0 + static_cast<double>((*offsets)[i]) / static_cast<double>(scale_j);
  }
};

// |(1/T_j) sum_a X_a(j,xi)| with X_a the kept-vs-full digit average gap.
double deviation_X(const LevelFrame& f, double xi);
double deviation_Y(const LevelFrame& f, double xi, const AtomMeasure& nu);

// u_{j,xi} = sqrt(T_j^{-1} ln(4 zeta0 (1+xi^2))). The per-frequency failure
// probability budgeted against it is 1/(zeta0 (1+xi^2)).
double hoeffding_threshold(long long count_j, double xi, double zeta0);
double failure_probability(long long count_j, double xi, double zeta0);

double threshold_X(long long count_j, long long scale_next, double xi, double zeta0);
// 2 u min{ g(|xi|), (1/pi)(N_{j+1}/|xi|) K_phi g(|xi|/2) }: both evaluable
// branches of the per-term J bound.
double threshold_Y(long long count_j, long long scale_next, double xi, double zeta0,
                   const EnvelopeG& g, double k_phi);

struct VerifyOutcome {
  bool accepted = false;
  long long violations = 0;
  double max_ratio_x = 0.0;  // max over grid of deviation / threshold
  double max_ratio_y = 0.0;
  double implied_c0 = 0.0;   // smallest C0 making the g-form Y bound hold
};

struct NuContext {
  const AtomMeasure* nu = nullptr;
  const EnvelopeG* g = nullptr;
  double k_phi = 0.0;
};

// Checks every xi = d0 k, k_lo <= k <= k_hi (xi = 0 is identically zero for
// both deviations and is excluded; negative k mirror positive for real data).
VerifyOutcome verify_range(const LevelFrame& f, const ConstructionParams& p,
                           const NuContext* nu_ctx, long long k_lo, long long k_hi);
VerifyOutcome verify_level(const LevelFrame& f, const ConstructionParams& p,
                           const NuContext* nu_ctx = nullptr);

struct LevelCertificate {
  int level = 0;  // j+1, the level whose digit sets were accepted
  double max_slack_x = 0.0;
  double max_slack_y = 0.0;
  int retries = 0;          // not serialized
  double implied_c0 = 0.0;  // not serialized; reported in the human table
};

struct CantorMeasure {
  ConstructionParams params;
  struct Level {
    int n = 0;
    int t = 0;
    std::vector<std::vector<int>> digit_sets;  // per a, in ascending-offset order
  };
  std::vector<Level> levels;                   // index 0 holds level 1
  std::vector<LevelCertificate> certificates;

  std::vector<long long> offsets_at(int j) const;
  GridMeasure level_measure(int j) const;  // j > depth -> DepthExceeded
  void validate() const;
};

// Draw-and-verify construction: per level, digit sets are drawn from
// substreams keyed (seed, level, attempt, slot) and accepted only if every
// grid bound holds; retries up to retry_cap attempts, then RetryExhausted.
CantorMeasure construct(const ConstructionParams& p, const AtomMeasure* nu = nullptr);

// Same tree shape but every interval keeps the same fixed digit set at every
// level; used for deterministic self-similar fixtures. No certificates.
CantorMeasure construct_fixed(const ConstructionParams& p, const std::vector<int>& digits);

// max over sampled intervals (random centers, dyadic lengths down to 1/N_J)
// of mu_J(I) / |I|^alpha.
double frostman_ratio(const CantorMeasure& cm, int num_samples, Rng& rng);

std::string cantor_to_json(const CantorMeasure& cm);
CantorMeasure cantor_from_json(const std::string& text);

}  // namespace salem
