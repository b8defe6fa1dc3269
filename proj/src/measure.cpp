#include "salem/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <json.hpp>

namespace salem {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Merge key: positions equal after rounding to 15 significant digits
// collapse into one atom. Products of dyadic/triadic rationals collide
// exactly; the rounding only absorbs last-ulp noise.
std::string pos_key(double x, double y, int dim) {
  char buf[64];
  if (x == 0.0) x = 0.0;  // normalize -0
  if (y == 0.0) y = 0.0;
  if (dim == 1) {
    std::snprintf(buf, sizeof(buf), "%.15g", x);
  } else {
    std::snprintf(buf, sizeof(buf), "%.15g,%.15g", x, y);
  }
  return buf;
}

AtomMeasure merge_atoms(AtomMeasure raw) {
  std::vector<std::size_t> idx(raw.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (raw.px[a] != raw.px[b]) return raw.px[a] < raw.px[b];
    return raw.py[a] < raw.py[b];
  });
  AtomMeasure out;
  out.dim = raw.dim;
  std::string cur_key;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::size_t i = idx[k];
    std::string key = pos_key(raw.px[i], raw.py[i], raw.dim);
    if (!out.empty() && key == cur_key) {
      out.w.back() += raw.w[i];
    } else {
      out.px.push_back(raw.px[i]);
      out.py.push_back(raw.py[i]);
      out.w.push_back(raw.w[i]);
      cur_key = std::move(key);
    }
  }
  return out;
}

}  // namespace

void GridMeasure::validate() const {
  require(level >= 0 && scale_den >= 1 && count >= 1, Err::InvalidArgument,
          "grid measure with bad level/scale/count");
  require(static_cast<long long>(offsets.size()) == count, Err::InvalidArgument,
          "grid measure offset count != T_j");
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    require(offsets[i] >= 0 && offsets[i] < scale_den, Err::InvalidArgument,
            "grid offset outside [0, N_j)");
    if (i > 0)
      require(offsets[i - 1] < offsets[i], Err::InvalidArgument,
              "grid offsets not strictly increasing");
  }
}

void AtomMeasure::validate() const {
  require(dim == 1 || dim == 2, Err::InvalidArgument, "atom measure dimension must be 1 or 2");
  require(px.size() == w.size() && py.size() == w.size(), Err::InvalidArgument,
          "atom measure field lengths differ");
  for (std::size_t i = 0; i < w.size(); ++i) {
    require(w[i] > 0.0 && std::isfinite(w[i]), Err::InvalidArgument,
            "atom weight must be positive and finite");
    require(std::isfinite(px[i]) && std::isfinite(py[i]), Err::InvalidArgument,
            "atom position must be finite");
    if (dim == 1)
      require(py[i] == 0.0, Err::InvalidArgument, "1-d atom with nonzero second coordinate");
  }
}

double AtomMeasure::support_diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      double dx = px[i] - px[j], dy = py[i] - py[j];
      best = std::max(best, std::hypot(dx, dy));
    }
  return best;
}

double AtomMeasure::min_abs_position() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) best = std::min(best, std::hypot(px[i], py[i]));
  return best;
}

AtomMeasure AtomMeasure::point(double x, double weight) {
  AtomMeasure m;
  m.push(x, weight);
  return m;
}

AtomMeasure AtomMeasure::from_lists(std::vector<double> xs, std::vector<double> ws) {
  require(xs.size() == ws.size(), Err::InvalidArgument, "position/weight length mismatch");
  AtomMeasure m;
  m.px = std::move(xs);
  m.w = std::move(ws);
  m.py.assign(m.px.size(), 0.0);
  m.validate();
  return m;
}

MeasureDiam MeasureDiam::for_construction(const AtomMeasure* nu) {
  MeasureDiam d;
  d.diam_mu = 1.0;
  d.diam_prod = 1.0;
  if (nu != nullptr && !nu->empty()) {
    // supp(mu * nu) is contained in [1,2]*supp(nu); r -> r*y is monotone in
    // r, so extremes are hit at r in {1,2}, y in {min, max} per coordinate.
    auto span = [](double lo, double hi) {
      double cands[4] = {lo, 2 * lo, hi, 2 * hi};
      return *std::max_element(cands, cands + 4) - *std::min_element(cands, cands + 4);
    };
    double xlo = *std::min_element(nu->px.begin(), nu->px.end());
    double xhi = *std::max_element(nu->px.begin(), nu->px.end());
    double dx = span(xlo, xhi);
    double dy = 0.0;
    if (nu->dim == 2) {
      double ylo = *std::min_element(nu->py.begin(), nu->py.end());
      double yhi = *std::max_element(nu->py.begin(), nu->py.end());
      dy = span(ylo, yhi);
    }
    d.diam_prod = std::max(1.0, std::hypot(dx, dy));
  }
  d.d0 = 1.0 / std::max(d.diam_mu, d.diam_prod);
  return d;
}

double total_mass(const GridMeasure& m) {
  m.validate();
  return 1.0;
}

double total_mass(const AtomMeasure& m) {
  require(!m.empty(), Err::EmptyMeasure, "total_mass of empty measure");
  double s = 0.0;
  for (double v : m.w) s += v;
  return s;
}

Rat measure_of_interval_rat(const GridMeasure& m, const Rat& lo, const Rat& hi) {
  require(lo <= hi, Err::InvalidInterval, "interval with lo > hi");
  // mass = sum over cells of overlap([lo,hi], [a, a+1/N]) * N / T
  Rat acc(0);
  const Rat one(1);
  const Rat inv_n(1, m.scale_den);
  for (long long off : m.offsets) {
    Rat a = one + Rat(off, m.scale_den);
    Rat b = a + inv_n;
    Rat l = rat_max(lo, a);
    Rat r = rat_min(hi, b);
    if (l < r) acc = acc + (r - l);
  }
  return acc * Rat(m.scale_den, m.count);
}

double measure_of_interval(const GridMeasure& m, double lo, double hi) {
  require(lo <= hi, Err::InvalidInterval, "interval with lo > hi");
  return measure_of_interval_rat(m, Rat::from_double(lo), Rat::from_double(hi)).to_double();
}

double cdf(const GridMeasure& m, double t) {
  if (t <= 1.0) {
    // support lives in [1,2]; still honor partial overlap at the boundary
    if (t < 1.0) return 0.0;
  }
  double inv_n = m.cell_width();
  double density = static_cast<double>(m.scale_den) / static_cast<double>(m.count);
  // offsets sorted: cells fully below t contribute 1/T, the straddling cell
  // contributes its partial overlap.
  double acc = 0.0;
  for (long long off : m.offsets) {
    double a = 1.0 + static_cast<double>(off) * inv_n;
    if (a >= t) break;
    double b = a + inv_n;
    acc += (std::min(b, t) - a) * density;
  }
  return acc;
}

AtomMeasure product_measure(const AtomMeasure& mu, const AtomMeasure& nu) {
  require(!mu.empty() && !nu.empty(), Err::EmptyMeasure, "product of empty measure");
  require(mu.dim == 1, Err::InvalidArgument, "scaling measure must be one-dimensional");
  mu.validate();
  nu.validate();
  AtomMeasure raw;
  raw.dim = nu.dim;
  raw.px.reserve(mu.size() * nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j)
      raw.push2(mu.px[i] * nu.px[j], mu.px[i] * nu.py[j], mu.w[i] * nu.w[j]);
  return merge_atoms(std::move(raw));
}

AtomMeasure discretize(const GridMeasure& m) {
  m.validate();
  AtomMeasure out;
  double half = 0.5 * m.cell_width();
  double wi = 1.0 / static_cast<double>(m.count);
  for (std::size_t i = 0; i < m.offsets.size(); ++i) out.push(m.left_endpoint(i) + half, wi);
  return out;
}

AtomMeasure convolve(const AtomMeasure& a, const AtomMeasure& b) {
  require(!a.empty() && !b.empty(), Err::EmptyMeasure, "convolution with empty measure");
  require(a.dim == b.dim, Err::InvalidArgument, "convolution dimension mismatch");
  AtomMeasure raw;
  raw.dim = a.dim;
  raw.px.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      raw.push2(a.px[i] + b.px[j], a.py[i] + b.py[j], a.w[i] * b.w[j]);
  return merge_atoms(std::move(raw));
}

std::complex<double> fourier_atoms(const AtomMeasure& m, double xi) {
  require(m.dim == 1, Err::InvalidArgument, "scalar frequency needs a 1-d measure");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < m.size(); ++i) acc += std::polar(m.w[i], -kTwoPi * m.px[i] * xi);
  return acc;
}

std::complex<double> fourier_atoms(const AtomMeasure& m, const std::array<double, 2>& xi) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < m.size(); ++i)
    acc += std::polar(m.w[i], -kTwoPi * (m.px[i] * xi[0] + m.py[i] * xi[1]));
  return acc;
}

std::string grid_to_json(const GridMeasure& m) {
  nlohmann::ordered_json j;
  j["level"] = m.level;
  j["scale_den"] = m.scale_den;
  j["count"] = m.count;
  j["offsets"] = m.offsets;
  return j.dump();
}

GridMeasure grid_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GridMeasure m;
  m.level = j.at("level").get<int>();
  m.scale_den = j.at("scale_den").get<long long>();
  m.count = j.at("count").get<long long>();
  m.offsets = j.at("offsets").get<std::vector<long long>>();
  m.validate();
  return m;
}

std::string atoms_to_json(const AtomMeasure& m) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.dim == 1) {
      arr.push_back({m.px[i], m.w[i]});
    } else {
      arr.push_back({nlohmann::ordered_json::array({m.px[i], m.py[i]}), m.w[i]});
    }
  }
  return arr.dump();
}

AtomMeasure atoms_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  AtomMeasure m;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, Err::InvalidArgument, "atom entry must be a pair");
    if (e[0].is_array()) {
      m.dim = 2;
      m.push2(e[0][0].get<double>(), e[0][1].get<double>(), e[1].get<double>());
    } else {
      m.push(e[0].get<double>(), e[1].get<double>());
    }
  }
  m.validate();
  return m;
}

}  // namespace salem
