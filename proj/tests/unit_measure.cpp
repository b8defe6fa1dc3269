#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "salem/measure.hpp"
#include "salem/rng.hpp"

using namespace salem;

namespace {

// level-1/level-2 fragment of a keep-2-of-4 tree: offsets {0,3}, children
// {1,2} under 0 and {0,3} under 3
GridMeasure level1() {
  GridMeasure m;
  m.level = 1;
  m.scale_den = 4;
  m.count = 2;
  m.offsets = {0, 3};
  return m;
}

GridMeasure level2() {
  GridMeasure m;
  m.level = 2;
  m.scale_den = 16;
  m.count = 4;
  m.offsets = {1, 2, 12, 15};
  return m;
}

AtomMeasure random_atoms(Rng& rng, int max_atoms = 6) {
  AtomMeasure m;
  int n = 1 + static_cast<int>(rng.next_below(max_atoms));
  for (int i = 0; i < n; ++i)
    m.push(4.0 * rng.next_unit() - 2.0, 0.25 + rng.next_unit());
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rat::from_double(0.625) == Rat(5, 8));
  CHECK(Rat::from_double(1.0 + 3.0 / 16.0) == Rat(19, 16));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(7, 3) * Rat(3, 7) == Rat(1));
  CHECK(Rat(-1, 2) < Rat(1, 3));
  CHECK_THROWS_AS(Rat(1, 0), Error);
}

TEST_CASE("total_mass") {
  CHECK(total_mass(level1()) == 1.0);
  CHECK(total_mass(level2()) == 1.0);

  AtomMeasure m;
  m.push(2.0, 0.5);
  m.push(3.0, 0.5);
  CHECK(total_mass(m) == doctest::Approx(1.0).epsilon(1e-15));

  AtomMeasure empty;
  CHECK_THROWS_AS(total_mass(empty), Error);
  try {
    total_mass(empty);
  } catch (const Error& e) {
    CHECK(e.code() == Err::EmptyMeasure);
  }
}

TEST_CASE("measure_of_interval: exact ancestor masses") {
  GridMeasure m2 = level2();
  // ancestor cell [1, 1+1/4] at level 1 holds exactly 1/T_1 = 1/2 of mu_2
  CHECK(measure_of_interval_rat(m2, Rat(1), Rat(5, 4)) == Rat(1, 2));
  CHECK(measure_of_interval_rat(m2, Rat(7, 4), Rat(2)) == Rat(1, 2));
  // level-2 cell
  CHECK(measure_of_interval_rat(m2, Rat(17, 16), Rat(18, 16)) == Rat(1, 4));
  // disjoint and full support
  CHECK(measure_of_interval(m2, 0.0, 0.5) == 0.0);
  CHECK(measure_of_interval_rat(m2, Rat(1), Rat(2)) == Rat(1));
  CHECK_THROWS_AS(measure_of_interval(m2, 1.5, 1.0), Error);
}

TEST_CASE("cdf") {
  GridMeasure m = level2();
  CHECK(cdf(m, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cdf(m, 0.0) == 0.0);
  // smallest cell fully below its right endpoint: F(a_min + 1/N) = 1/T
  double a_min = m.left_endpoint(0);
  CHECK(cdf(m, a_min + m.cell_width()) ==
        doctest::Approx(1.0 / static_cast<double>(m.count)).epsilon(1e-14));

  // against a direct overlap-summation oracle, and monotone on random pairs
  Rng rng(7);
  auto direct = [&](double t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.offsets.size(); ++i) {
      double a = m.left_endpoint(i), b = a + m.cell_width();
      double ov = std::min(b, t) - a;
      if (ov > 0.0)
        acc += ov * static_cast<double>(m.scale_den) / static_cast<double>(m.count);
    }
    return acc;
  };
  for (int i = 0; i < 200; ++i) {
    double t1 = 0.5 + 2.0 * rng.next_unit();
    double t2 = 0.5 + 2.0 * rng.next_unit();
    CHECK(cdf(m, t1) == doctest::Approx(direct(t1)).epsilon(1e-13));
    if (t1 > t2) std::swap(t1, t2);
    CHECK(cdf(m, t1) <= cdf(m, t2) + 1e-15);
  }
}

TEST_CASE("product_measure") {
  CHECK_THROWS_AS(product_measure(AtomMeasure{}, AtomMeasure::point(1.0)), Error);

  AtomMeasure d2 = AtomMeasure::point(2.0), d3 = AtomMeasure::point(3.0);
  AtomMeasure p = product_measure(d2, d3);
  REQUIRE(p.size() == 1);
  CHECK(p.px[0] == 6.0);
  CHECK(p.w[0] == 1.0);

  AtomMeasure a = AtomMeasure::point(1.5, 2.0);
  AtomMeasure b = AtomMeasure::point(0.5, 3.0);
  CHECK(total_mass(product_measure(a, b)) == doctest::Approx(6.0).epsilon(1e-14));

  AtomMeasure mu = AtomMeasure::from_lists({1.0, 2.0}, {0.5, 0.5});
  AtomMeasure nu = AtomMeasure::from_lists({1.0, -1.0}, {0.5, 0.5});
  AtomMeasure q = product_measure(mu, nu);
  REQUIRE(q.size() == 4);
  CHECK(q.px[0] == -2.0);
  CHECK(q.px[1] == -1.0);
  CHECK(q.px[2] == 1.0);
  CHECK(q.px[3] == 2.0);
  for (double w : q.w) CHECK(w == doctest::Approx(0.25).epsilon(1e-15));

  // mass multiplicative + transform matches the unmerged pair enumeration
  Rng rng(11);
  for (int it = 0; it < 25; ++it) {
    AtomMeasure x = random_atoms(rng), y = random_atoms(rng);
    AtomMeasure z = product_measure(x, y);
    CHECK(total_mass(z) ==
          doctest::Approx(total_mass(x) * total_mass(y)).epsilon(1e-12));
    auto pairs = oracle::product_pairs(x, y);
    double xi = 3.0 * rng.next_unit();
    CHECK(std::abs(fourier_atoms(z, xi) - oracle::pairs_transform(pairs, xi)) < 1e-12);
  }
}

TEST_CASE("discretize") {
  GridMeasure m0;  // level 0: single cell [1,2]
  m0.offsets = {0};
  AtomMeasure a0 = discretize(m0);
  REQUIRE(a0.size() == 1);
  CHECK(a0.px[0] == 1.5);
  CHECK(a0.w[0] == 1.0);

  GridMeasure m2 = level2();
  AtomMeasure a2 = discretize(m2);
  CHECK(a2.size() == static_cast<std::size_t>(m2.count));
  CHECK(total_mass(a2) == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t i = 0; i < a2.size(); ++i)
    CHECK(std::abs(a2.px[i] - m2.left_endpoint(i)) ==
          doctest::Approx(0.5 * m2.cell_width()).epsilon(1e-15));
}

TEST_CASE("convolve") {
  AtomMeasure c = convolve(AtomMeasure::point(2.0), AtomMeasure::point(0.5));
  REQUIRE(c.size() == 1);
  CHECK(c.px[0] == 2.5);

  Rng rng(13);
  for (int it = 0; it < 25; ++it) {
    AtomMeasure x = random_atoms(rng), y = random_atoms(rng);
    AtomMeasure z = convolve(x, y);
    CHECK(total_mass(z) ==
          doctest::Approx(total_mass(x) * total_mass(y)).epsilon(1e-12));
    auto pairs = oracle::convolve_pairs(x, y);
    double xi = 3.0 * rng.next_unit();
    CHECK(std::abs(fourier_atoms(z, xi) - oracle::pairs_transform(pairs, xi)) < 1e-12);
  }

  AtomMeasure two = AtomMeasure::from_lists({0.0, 1.0}, {0.5, 0.5});
  CHECK(convolve(two, two).size() == 3);  // 0, 1, 2 after merging the middle
  CHECK_THROWS_AS(convolve(AtomMeasure{}, two), Error);
}

TEST_CASE("fourier_atoms") {
  AtomMeasure m = AtomMeasure::from_lists({2.0, 3.0}, {0.5, 1.5});
  CHECK(std::abs(fourier_atoms(m, 0.0) - std::complex<double>(2.0, 0.0)) < 1e-15);

  AtomMeasure d1 = AtomMeasure::point(1.0);
  CHECK(std::abs(fourier_atoms(d1, 0.5) - std::complex<double>(-1.0, 0.0)) < 1e-15);

  // convolution identity
  Rng rng(17);
  for (int it = 0; it < 25; ++it) {
    AtomMeasure x = random_atoms(rng), y = random_atoms(rng);
    double xi = 5.0 * rng.next_unit() - 2.5;
    auto lhs = fourier_atoms(convolve(x, y), xi);
    auto rhs = fourier_atoms(x, xi) * fourier_atoms(y, xi);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }

  // pushforward identity for products
  for (int it = 0; it < 25; ++it) {
    AtomMeasure x = random_atoms(rng), y = random_atoms(rng);
    double xi = 5.0 * rng.next_unit() - 2.5;
    auto lhs = fourier_atoms(product_measure(x, y), xi);
    std::complex<double> rhs{0.0, 0.0};
    for (std::size_t i = 0; i < y.size(); ++i)
      rhs += y.w[i] * fourier_atoms(x, y.px[i] * xi);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("fourier_atoms in the plane") {
  AtomMeasure m;
  m.dim = 2;
  m.push2(1.0, 0.0, 0.5);
  m.push2(0.0, 1.0, 0.5);
  CHECK(std::abs(fourier_atoms(m, {0.0, 0.0}) - std::complex<double>(1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(fourier_atoms(m, 1.0), Error);  // scalar xi needs 1-d measure
}

TEST_CASE("atom merge uses 15-significant-digit keys") {
  AtomMeasure x = AtomMeasure::from_lists({1.0 / 3.0, 3.0}, {1.0, 1.0});
  AtomMeasure y = AtomMeasure::point(3.0);
  AtomMeasure p = product_measure(x, y);
  CHECK(p.size() == 2);  // (1/3)*3 merges with nothing spurious; 9 stays apart
}

TEST_CASE("measure diameters and d0") {
  MeasureDiam plain = MeasureDiam::for_construction(nullptr);
  CHECK(plain.d0 == 1.0);

  AtomMeasure nu = AtomMeasure::from_lists({1.0, 2.0}, {0.5, 0.5});
  MeasureDiam d = MeasureDiam::for_construction(&nu);
  CHECK(d.diam_prod == doctest::Approx(3.0).epsilon(1e-15));  // [1,2]*[1,2] = [1,4]
  CHECK(d.d0 == 1.0 / std::max(d.diam_mu, d.diam_prod));
}

TEST_CASE("serialization round-trips") {
  GridMeasure m2 = level2();
  std::string j1 = grid_to_json(m2);
  GridMeasure back = grid_from_json(j1);
  CHECK(grid_to_json(back) == j1);
  CHECK(back.offsets == m2.offsets);

  Rng rng(23);
  AtomMeasure a = random_atoms(rng);
  std::string j2 = atoms_to_json(a);
  AtomMeasure aback = atoms_from_json(j2);
  CHECK(atoms_to_json(aback) == j2);
  CHECK(aback.size() == a.size());

  AtomMeasure p2;
  p2.dim = 2;
  p2.push2(0.25, -1.5, 2.0);
  CHECK(atoms_from_json(atoms_to_json(p2)).dim == 2);
}

TEST_CASE("grid validation rejects bad data") {
  GridMeasure m = level2();
  m.offsets[1] = m.offsets[0];
  CHECK_THROWS_AS(m.validate(), Error);
  GridMeasure m2 = level2();
  m2.offsets[3] = 16;  // outside [0, N)
  CHECK_THROWS_AS(m2.validate(), Error);
}
