#include "salem/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "salem/construct.hpp"
#include "salem/dimension.hpp"
#include "salem/fixtures.hpp"
#include "salem/fourier.hpp"
#include "salem/parallel.hpp"
#include "salem/sumset.hpp"

namespace salem {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct GlobalOpts {
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Err::ConfigError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Err::ConfigError, "cannot write " + path);
  out << text;
}

std::string resolve(const GlobalOpts& g, const std::string& path) {
  if (g.out_dir.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(g.out_dir) / path).string();
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  require(j.is_object(), Err::ConfigError, where + " must be a JSON object");
  for (const auto& [key, _] : j.items())
    require(allowed.count(key) > 0, Err::ConfigError, "unknown key '" + key + "' in " + where);
}

std::string fnv_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Atom-measure fixtures: {kind: interval|atoms|cantor_ref, ...}
AtomMeasure parse_atom_fixture(const json& j, const std::string& where) {
  require(j.is_object() && j.contains("kind"), Err::ConfigError,
          where + " fixture needs a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "interval") {
    check_keys(j, {"kind", "lo", "hi", "points"}, where);
    return fixtures::uniform_net(j.at("lo").get<double>(), j.at("hi").get<double>(),
                                 j.value("points", 1024));
  }
  if (kind == "atoms") {
    check_keys(j, {"kind", "atoms", "path"}, where);
    if (j.contains("path")) return atoms_from_json(slurp(j.at("path").get<std::string>()));
    AtomMeasure m;
    for (const auto& e : j.at("atoms"))
      m.push(e.at(0).get<double>(), e.at(1).get<double>());
    m.validate();
    return m;
  }
  if (kind == "cantor_ref") {
    check_keys(j, {"kind", "path", "level", "n", "digits", "depth"}, where);
    if (j.contains("path")) {
      CantorMeasure cm = cantor_from_json(slurp(j.at("path").get<std::string>()));
      int level = j.value("level", cm.params.depth);
      return discretize(cm.level_measure(level));
    }
    return fixtures::cantor_pattern_atoms(j.at("n").get<int>(),
                                          j.at("digits").get<std::vector<int>>(),
                                          j.at("depth").get<int>());
  }
  fail(Err::ConfigError, where + ": unknown fixture kind '" + kind + "'");
}

// Set fixtures for the sumset pipeline.
SetSpec parse_set_spec(const json& j, const std::string& where) {
  require(j.is_object() && j.contains("kind"), Err::ConfigError, where + " needs a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "interval") {
    check_keys(j, {"kind", "lo", "hi", "a", "b", "points"}, where);
    if (j.contains("a")) {
      auto a = j.at("a").get<std::array<double, 2>>();
      auto b = j.at("b").get<std::array<double, 2>>();
      return SetSpec::segment(a, b);
    }
    return SetSpec::interval(j.at("lo").get<double>(), j.at("hi").get<double>());
  }
  if (kind == "atoms") {
    check_keys(j, {"kind", "points"}, where);
    std::vector<std::array<double, 2>> pts;
    for (const auto& e : j.at("points")) {
      if (e.is_array()) {
        pts.push_back({e.at(0).get<double>(), e.size() > 1 ? e.at(1).get<double>() : 0.0});
      } else {
        pts.push_back({e.get<double>(), 0.0});
      }
    }
    return SetSpec::atoms(std::move(pts));
  }
  if (kind == "cantor_ref") {
    check_keys(j, {"kind", "path", "level", "n", "digits", "offset", "extent"}, where);
    if (j.contains("path")) {
      auto cm = std::make_shared<CantorMeasure>(
          cantor_from_json(slurp(j.at("path").get<std::string>())));
      return SetSpec::cantor_tree(std::move(cm));
    }
    return SetSpec::cantor(j.at("n").get<int>(), j.at("digits").get<std::vector<int>>(),
                           j.value("offset", 0.0), j.value("extent", 1.0));
  }
  fail(Err::ConfigError, where + ": unknown set kind '" + kind + "'");
}

// Measure on a set for the transform side of the pipeline.
AtomMeasure pipeline_measure(const json& j, const SetSpec& spec, double delta_min,
                             const std::string& where) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cantor_ref" && j.contains("path")) {
    CantorMeasure cm = cantor_from_json(slurp(j.at("path").get<std::string>()));
    int level = j.value("level", cm.params.depth);
    return discretize(cm.level_measure(level));
  }
  if (kind == "interval" && j.contains("points") && !j.contains("a")) {
    return fixtures::uniform_net(j.at("lo").get<double>(), j.at("hi").get<double>(),
                                 j.at("points").get<int>());
  }
  auto net = spec.net(delta_min);
  require(!net.empty(), Err::ConfigError, where + ": empty net");
  AtomMeasure m;
  m.dim = 1;
  for (const auto& p : net)
    if (p[1] != 0.0) m.dim = 2;
  double w = 1.0 / static_cast<double>(net.size());
  for (const auto& p : net) m.push2(p[0], p[1], w);
  if (m.dim == 1)
    for (auto& y : m.py) y = 0.0;
  return m;
}

ojson output_header(const std::string& command, const json& config, std::uint64_t seed) {
  ojson out;
  out["command"] = command;
  out["config_hash"] = fnv_hash(config.dump() + "#" + std::to_string(seed));
  out["seed"] = seed;
  return out;
}

int cmd_construct(const json& cfg, const GlobalOpts& g) {
  check_keys(cfg,
             {"alpha", "n_star", "depth", "seed", "k_max", "retry_cap", "zeta0", "ratio_lo",
              "ratio_hi", "branch", "keep", "nu", "out_measure", "out_certificates"},
             "construct config");
  std::optional<AtomMeasure> nu;
  if (cfg.contains("nu")) nu = parse_atom_fixture(cfg.at("nu"), "nu");

  std::uint64_t seed = g.seed.value_or(cfg.value("seed", 0ULL));
  ConstructionParams p = make_params(cfg.at("alpha").get<double>(), cfg.at("n_star").get<int>(),
                                     cfg.at("depth").get<int>(), seed, nu ? &*nu : nullptr);
  if (cfg.contains("branch")) p.branch = cfg.at("branch").get<std::vector<int>>();
  if (cfg.contains("keep")) p.keep = cfg.at("keep").get<std::vector<int>>();
  if (cfg.contains("k_max")) p.k_max = cfg.at("k_max").get<long long>();
  if (cfg.contains("retry_cap")) p.retry_cap = cfg.at("retry_cap").get<int>();
  if (cfg.contains("zeta0")) p.zeta0 = cfg.at("zeta0").get<double>();
  if (cfg.contains("ratio_lo")) p.ratio_lo = cfg.at("ratio_lo").get<double>();
  if (cfg.contains("ratio_hi")) p.ratio_hi = cfg.at("ratio_hi").get<double>();
  p.validate();

  CantorMeasure cm = construct(p, nu ? &*nu : nullptr);

  std::string measure_path = resolve(g, cfg.at("out_measure").get<std::string>());
  spit(measure_path, cantor_to_json(cm));

  std::ostringstream table;
  table << "level  retries  max_slack_X          max_slack_Y          implied_C0\n";
  for (const auto& c : cm.certificates) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-6d %-8d %-20.12g %-20.12g %-20.12g\n", c.level,
                  c.retries, c.max_slack_x, c.max_slack_y, c.implied_c0);
    table << line;
  }
  std::string cert_path = cfg.contains("out_certificates")
                              ? resolve(g, cfg.at("out_certificates").get<std::string>())
                              : measure_path + ".certs.txt";
  spit(cert_path, table.str());

  ojson out = output_header("construct", cfg, seed);
  out["out_measure"] = cfg.at("out_measure").get<std::string>();
  out["levels"] = ojson::array();
  for (const auto& c : cm.certificates)
    out["levels"].push_back({{"level", c.level},
                             {"retries", c.retries},
                             {"max_slack_X", c.max_slack_x},
                             {"max_slack_Y", c.max_slack_y}});
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_fourier_scan(const json& cfg, const GlobalOpts& g) {
  check_keys(cfg,
             {"measure", "level", "window", "log_correct", "product_nu", "out_csv",
              "out_report", "beta_max"},
             "fourier-scan config");
  CantorMeasure cm = cantor_from_json(slurp(cfg.at("measure").get<std::string>()));
  int level = cfg.value("level", cm.params.depth);
  GridMeasure grid = cm.level_measure(level);
  auto window = cfg.at("window").get<std::array<double, 2>>();
  bool log_correct = cfg.value("log_correct", false);
  double beta_max = cfg.value("beta_max", 1.0);
  std::optional<AtomMeasure> nu;
  if (cfg.contains("product_nu")) nu = parse_atom_fixture(cfg.at("product_nu"), "product_nu");

  const double d0 = cm.params.d0;
  const double zeta0 = cm.params.zeta0;
  auto k_lo = static_cast<long long>(std::max(1.0, std::ceil(window[0] / d0)));
  auto k_hi = static_cast<long long>(std::floor(window[1] / d0));
  require(k_hi >= k_lo, Err::ConfigError, "empty scan window");
  std::size_t n = static_cast<std::size_t>(k_hi - k_lo + 1);

  std::vector<double> xi(n), re(n), im(n), mag(n), fit_in(n);
  par::run_chunks(static_cast<std::int64_t>(n), 64,
                  [&](std::size_t, std::int64_t lo, std::int64_t hi) {
                    for (std::int64_t i = lo; i < hi; ++i) {
                      double x = d0 * static_cast<double>(k_lo + i);
                      std::complex<double> v =
                          nu ? fourier_product(grid, *nu, x) : fourier_grid(grid, x);
                      auto u = static_cast<std::size_t>(i);
                      xi[u] = x;
                      re[u] = v.real();
                      im[u] = v.imag();
                      mag[u] = std::abs(v);
                      fit_in[u] = log_correct
                                      ? mag[u] / std::sqrt(std::log(4.0 * zeta0 * (1.0 + x * x)))
                                      : mag[u];
                    }
                  });

  DecayReport rep = decay_fit(xi, fit_in, window[0], window[1], beta_max);

  std::ostringstream csv;
  csv << "k,xi,re,im,abs,envelope_bound\n";
  for (std::size_t i = 0; i < n; ++i) {
    double bound = rep.fitted_C * std::pow(1.0 + xi[i], -0.5 * rep.fitted_beta);
    if (log_correct) bound *= std::sqrt(std::log(4.0 * zeta0 * (1.0 + xi[i] * xi[i])));
    csv << (k_lo + static_cast<long long>(i)) << "," << fmt17(xi[i]) << "," << fmt17(re[i])
        << "," << fmt17(im[i]) << "," << fmt17(mag[i]) << "," << fmt17(bound) << "\n";
  }
  spit(resolve(g, cfg.at("out_csv").get<std::string>()), csv.str());

  ojson out = output_header("fourier-scan", cfg, cm.params.seed);
  out["report"] = ojson::parse(rep.to_json());
  std::string report_text = out.dump(2) + "\n";
  spit(resolve(g, cfg.at("out_report").get<std::string>()), report_text);
  std::cout << report_text;
  return 0;
}

int cmd_dim(const json& cfg, const GlobalOpts& g) {
  check_keys(cfg, {"measure", "window", "log_correct", "num_samples", "product_nu", "out"},
             "dim config");
  CantorMeasure cm = cantor_from_json(slurp(cfg.at("measure").get<std::string>()));
  auto window = cfg.at("window").get<std::array<double, 2>>();
  bool log_correct = cfg.value("log_correct", true);
  int num_samples = cfg.value("num_samples", 4096);
  GridMeasure grid = cm.level_measure(cm.params.depth);

  double hausdorff = hausdorff_dim_estimate(cm);
  double fourier = fourier_dim_estimate([&](double x) { return fourier_grid(grid, x); },
                                        window[0], window[1], cm.params.d0, log_correct,
                                        cm.params.zeta0, 1);
  Rng rng(cm.params.seed ^ 0x5a1e5a1eULL);
  double frostman = frostman_ratio(cm, num_samples, rng);

  ojson out = output_header("dim", cfg, cm.params.seed);
  out["hausdorff"] = hausdorff;
  out["fourier"] = fourier;
  out["frostman_ratio"] = frostman;
  if (cfg.contains("product_nu")) {
    AtomMeasure nu = parse_atom_fixture(cfg.at("product_nu"), "product_nu");
    out["fourier_product"] = fourier_dim_estimate(
        [&](double x) { return fourier_product(grid, nu, x); }, window[0], window[1],
        cm.params.d0, log_correct, cm.params.zeta0, 1);
  }
  std::string text = out.dump(2) + "\n";
  spit(resolve(g, cfg.at("out").get<std::string>()), text);
  std::cout << text;
  return 0;
}

int cmd_energy(const json& cfg, const GlobalOpts& g) {
  check_keys(cfg, {"atoms", "s", "method", "cutoff", "mollify_eps", "out"}, "energy config");
  AtomMeasure m = parse_atom_fixture(cfg.at("atoms"), "atoms");
  std::vector<double> ss;
  if (cfg.at("s").is_array()) {
    ss = cfg.at("s").get<std::vector<double>>();
  } else {
    ss.push_back(cfg.at("s").get<double>());
  }
  std::string method = cfg.value("method", "both");
  require(method == "direct" || method == "fourier" || method == "both", Err::ConfigError,
          "method must be direct|fourier|both");

  ojson out = output_header("energy", cfg, 0);
  out["results"] = ojson::array();
  for (double s : ss) {
    EnergySpec spec;
    spec.s = s;
    spec.d = 1;
    spec.cutoff = cfg.value("cutoff", 1e4);
    spec.mollify_eps = cfg.value("mollify_eps", 0.0);
    if (method != "fourier") {
      EnergyResult r = energy_direct(m, spec);
      out["results"].push_back(ojson::parse(r.to_json("direct", s)));
    }
    if (method != "direct") {
      EnergyResult r = energy_fourier([&](double x) { return fourier_atoms(m, x); }, spec);
      out["results"].push_back(ojson::parse(r.to_json("fourier", s)));
    }
  }
  std::string text = out.dump(2) + "\n";
  spit(resolve(g, cfg.at("out").get<std::string>()), text);
  std::cout << text;
  return 0;
}

int cmd_sumset(const json& cfg, const GlobalOpts& g) {
  check_keys(cfg,
             {"R", "Y", "Z", "d", "mode", "s", "cutoff", "cutoff_schedule", "delta_schedule",
              "ratio_threshold", "cover_floor", "out"},
             "sumset config");
  SetSpec R = parse_set_spec(cfg.at("R"), "R");
  SetSpec Y = parse_set_spec(cfg.at("Y"), "Y");
  SetSpec Z = parse_set_spec(cfg.at("Z"), "Z");
  int d = cfg.value("d", 1);

  std::vector<double> deltas;
  if (cfg.contains("delta_schedule")) {
    deltas = cfg.at("delta_schedule").get<std::vector<double>>();
  } else {
    for (int e = 6; e <= 11; ++e) deltas.push_back(std::ldexp(1.0, -e));
  }
  auto cover = sumset_cover_schedule(R, Y, Z, d, deltas);

  bool stabilized = cover.size() >= 2;
  for (std::size_t i = 1; i < cover.size(); ++i) {
    double rel = std::abs(cover[i].second / cover[i - 1].second - 1.0);
    if (rel >= 0.10) stabilized = false;
  }
  double floor = cfg.value("cover_floor", 0.5);
  bool above_floor = cover.back().second >= floor;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [dl, cv] : cover) {
    double x = std::log(dl), y = std::log(std::max(cv, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  auto n_cov = static_cast<double>(cover.size());
  double slope = (n_cov * sxy - sx * sy) / (n_cov * sxx - sx * sx);

  PipelineOptions opts;
  opts.mode = cfg.value("mode", "lebesgue");
  opts.s = cfg.value("s", 0.5);
  opts.d = d;
  opts.cutoff = cfg.value("cutoff", 4096.0);
  if (cfg.contains("cutoff_schedule"))
    opts.cutoff_schedule = cfg.at("cutoff_schedule").get<std::vector<double>>();
  opts.ratio_threshold = cfg.value("ratio_threshold", 0.7);

  double delta_min = *std::min_element(deltas.begin(), deltas.end());
  AtomMeasure Rm = pipeline_measure(cfg.at("R"), R, delta_min, "R");
  AtomMeasure Ym = pipeline_measure(cfg.at("Y"), Y, delta_min, "Y");
  AtomMeasure Zm = pipeline_measure(cfg.at("Z"), Z, delta_min, "Z");
  PipelineReport pipe = theorem_pipeline(Rm, Ym, Zm, opts);

  std::string verdict;
  if (pipe.verdict == "positive" && stabilized && above_floor) {
    verdict = "positive";
  } else if (pipe.verdict == "negative") {
    verdict = "negative";
  } else {
    verdict = "inconclusive";
  }

  ojson out = output_header("sumset", cfg, 0);
  out["cover"] = ojson::array();
  for (const auto& [dl, cv] : cover) out["cover"].push_back({{"delta", dl}, {"measure", cv}});
  out["cover_stabilized"] = stabilized;
  out["cover_above_floor"] = above_floor;
  out["cover_loglog_slope"] = slope;
  out["pipeline"] = ojson::parse(pipe.detail_json);
  out["verdict"] = verdict;
  std::string text = out.dump(2) + "\n";
  spit(resolve(g, cfg.at("out").get<std::string>()), text);
  std::cout << text;
  return 0;
}

int cmd_verify(const json& cfg, const GlobalOpts& g) {
  check_keys(cfg, {"measure", "nu", "out"}, "verify config");
  CantorMeasure cm = cantor_from_json(slurp(cfg.at("measure").get<std::string>()));
  std::optional<AtomMeasure> nu;
  if (cfg.contains("nu")) nu = parse_atom_fixture(cfg.at("nu"), "nu");

  std::optional<EnvelopeG> env;
  NuContext ctx;
  if (nu) {
    double x_needed = std::max(64.0, 2.0 * cm.params.d0 * static_cast<double>(cm.params.k_max));
    env.emplace(*nu, 1e3, 64, x_needed);
    ctx.nu = &*nu;
    ctx.g = &*env;
    ctx.k_phi = phi_envelope(*nu, *env);
  }

  bool ok = true;
  ojson levels = ojson::array();
  std::vector<long long> offsets{0};
  for (int j = 0; j < cm.params.depth; ++j) {
    const auto& L = cm.levels[static_cast<std::size_t>(j)];
    LevelFrame f{j,       cm.params.scale(j), cm.params.scale(j + 1), L.n, L.t,
                 &offsets, &L.digit_sets};
    VerifyOutcome v = verify_level(f, cm.params, nu ? &ctx : nullptr);
    const auto& cert = cm.certificates[static_cast<std::size_t>(j)];
    bool x_match = v.max_ratio_x == cert.max_slack_x;
    bool y_match = !nu || v.max_ratio_y == cert.max_slack_y;
    bool level_ok = v.violations == 0 && x_match && y_match;
    ok = ok && level_ok;
    levels.push_back({{"level", j + 1},
                      {"violations", v.violations},
                      {"max_ratio_X", v.max_ratio_x},
                      {"stored_X", cert.max_slack_x},
                      {"max_ratio_Y", v.max_ratio_y},
                      {"stored_Y", cert.max_slack_y},
                      {"y_checked", static_cast<bool>(nu)},
                      {"ok", level_ok}});

    std::vector<long long> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(L.t));
    for (std::size_t i = 0; i < offsets.size(); ++i)
      for (int b : L.digit_sets[i]) next.push_back(offsets[i] * L.n + b);
    offsets = std::move(next);
  }

  ojson out = output_header("verify", cfg, cm.params.seed);
  out["levels"] = levels;
  out["ok"] = ok;
  std::string text = out.dump(2) + "\n";
  if (cfg.contains("out")) spit(resolve(g, cfg.at("out").get<std::string>()), text);
  std::cout << text;
  return ok ? 0 : 2;
}

int cmd_export(const json& cfg, const GlobalOpts& g) {
  check_keys(cfg, {"measure", "level", "format", "out"}, "export config");
  CantorMeasure cm = cantor_from_json(slurp(cfg.at("measure").get<std::string>()));
  int level = cfg.value("level", cm.params.depth);
  std::string format = cfg.value("format", "grid");
  GridMeasure grid = cm.level_measure(level);
  std::string text;
  if (format == "grid") {
    text = grid_to_json(grid);
  } else if (format == "atoms") {
    text = atoms_to_json(discretize(grid));
  } else {
    fail(Err::ConfigError, "format must be grid|atoms");
  }
  spit(resolve(g, cfg.at("out").get<std::string>()), text);
  std::cout << "{\"command\":\"export\",\"level\":" << level << ",\"format\":\"" << format
            << "\"}\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"random Cantor measure construction and Fourier analysis toolkit"};
  app.fallthrough();
  GlobalOpts g;
  std::uint64_t seed_opt = 0;
  bool seed_given = false;
  app.add_option("--out", g.out_dir, "directory prefix for output files");
  app.add_option("--threads", g.threads, "worker thread count (default: cores)");
  auto* seed_flag =
      app.add_option("--seed", seed_opt, "override the seed from the config file");

  struct Cmd {
    std::string name;
    std::string config;
    int (*fn)(const json&, const GlobalOpts&);
  };
  std::vector<Cmd> cmds = {
      {"construct", "", cmd_construct}, {"fourier-scan", "", cmd_fourier_scan},
      {"dim", "", cmd_dim},             {"energy", "", cmd_energy},
      {"sumset", "", cmd_sumset},       {"verify", "", cmd_verify},
      {"export", "", cmd_export},
  };
  for (auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name);
    sub->add_option("--config", c.config, "JSON config file")->required();
  }
  app.require_subcommand(1);

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  seed_given = seed_flag->count() > 0;
  if (seed_given) g.seed = seed_opt;
  if (g.threads > 0) par::set_thread_count(g.threads);

  try {
    for (const auto& c : cmds) {
      if (app.got_subcommand(c.name)) {
        json cfg = json::parse(slurp(c.config));
        return c.fn(cfg, g);
      }
    }
    std::cerr << "no subcommand\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Err::RetryExhausted:
        return 2;
      case Err::NonconvergentTail:
        return 3;
      default:
        return 1;
    }
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("salem");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace salem
