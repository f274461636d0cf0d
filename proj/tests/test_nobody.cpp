#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cominus/nobody.hpp"

using namespace cominus;

TEST_CASE("valuation tables match the embedded fixtures") {
  auto t6 = plucker_valuation_table(CartanType::parse("E6"), 6, true);
  CHECK(t6.size() == 27);
  CHECK(valuation_to_string(t6.at(label_from_string("p4''"))) == "0000000000010111");
  for (const auto& [l, v] : t6)
    for (int x : v) CHECK((x == 0 || x == 1));

  auto t7 = plucker_valuation_table(CartanType::parse("E7"), 7, true);
  CHECK(t7.size() == 56);
  CHECK(valuation_to_string(t7.at(label_from_string("p0"))) == std::string(27, '0'));
  CHECK(valuation_to_string(t7.at(label_from_string("p27"))) == std::string(27, '1'));

  std::string csv = valuation_table_csv(CartanType::parse("E6"), 6);
  CHECK(csv.find("p16,1111111111111111") != std::string::npos);
}

TEST_CASE("simplex volumes") {
  for (int d : {1, 2, 3, 5}) {
    std::vector<Point> pts;
    pts.push_back(Point(d, 0));
    for (int i = 0; i < d; ++i) {
      Point e(d, 0);
      e[i] = 1;
      pts.push_back(e);
    }
    CHECK(hull_volume(pts) == 1);
    // d-simplex f-vector: binomial(d+1, k+1)
    auto fv = f_vector(pts);
    REQUIRE(static_cast<int>(fv.size()) == d);
    long binom = d + 1;
    for (int k = 0; k < d; ++k) {
      CHECK(fv[k] == binom);
      binom = binom * (d - k) / (k + 2);
    }
  }
}

TEST_CASE("squares, cubes, degenerate input") {
  std::vector<Point> sq = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(hull_volume(sq) == 2);
  auto fv = f_vector(sq);
  CHECK(fv == std::vector<long>{4, 4});
  Polytope p = hull(sq);
  CHECK(p.facets.size() == 4);
  auto latt = zero_one_lattice_points(p);
  CHECK(latt.size() == 4);

  std::vector<Point> cube;
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  CHECK(hull_volume(cube) == 6);
  CHECK(f_vector(cube) == std::vector<long>{8, 12, 6});

  // interior point does not change anything
  std::vector<Point> tri = {{0, 0}, {3, 0}, {0, 3}, {1, 1}};
  CHECK(hull_volume(tri) == 9);

  // degenerate input reports the affine dimension
  std::vector<Point> flat = {{0, 0}, {1, 1}, {2, 2}};
  CHECK_THROWS_WITH_AS(hull_volume(flat), doctest::Contains("affine dimension 1"),
                       std::domain_error);

  // non-0/1 input rejected by the lattice-point precondition
  std::vector<Point> big = {{0, 0}, {2, 0}, {0, 2}};
  CHECK_THROWS_AS(zero_one_lattice_points(hull(big)), std::domain_error);
}

TEST_CASE("volume is insertion-order independent") {
  std::vector<Point> pts = valuation_points(CartanType::parse("E6"), 6);
  // degenerate-position stress: a handful of shuffles of a nontrivial polytope
  std::mt19937 rng(3);
  std::vector<Point> small;
  for (const auto& p : pts) small.push_back(Point(p.begin(), p.begin() + 8));
  // project E6 valuations to 8 coordinates: still a 0/1 polytope
  mpq_class base = 0;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Point> shuffled = small;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.erase(std::unique(shuffled.begin(), shuffled.end()), shuffled.end());
    std::sort(shuffled.begin(), shuffled.end());
    shuffled.erase(std::unique(shuffled.begin(), shuffled.end()), shuffled.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    mpq_class v = hull_volume(shuffled);
    if (trial == 0) base = v;
    CHECK(v == base);
  }
  CHECK(base > 0);
}

TEST_CASE("E6 Newton-Okounkov body") {
  std::vector<Point> pts = valuation_points(CartanType::parse("E6"), 6);
  REQUIRE(pts.size() == 27);
  CHECK(affine_dimension(pts) == 16);
  CHECK(hull_volume(pts) == 78);

  Polytope p = hull(pts);
  CHECK(p.facets.size() == 22);
  auto latt = zero_one_lattice_points(p);
  CHECK(latt.size() == 27);
  std::set<Point> lset(latt.begin(), latt.end()), pset(pts.begin(), pts.end());
  CHECK(lset == pset);

  std::vector<long> fv = f_vector(pts);
  std::vector<long> expect = {27,    297,   1858,  7598, 21884, 46415, 74521, 92095,
                              88372, 65979, 38160, 16900, 5612,  1349,  221,   22};
  CHECK(fv == expect);
}
