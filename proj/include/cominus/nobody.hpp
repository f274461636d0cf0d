#ifndef COMINUS_NOBODY_HPP
#define COMINUS_NOBODY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cominus/subduction.hpp"

namespace cominus {

using Point = std::vector<long>;

// Valuations of all Plucker coordinates of (t, k). With check_fixture, the
// result is compared entry-by-entry against the embedded tables for E6/E7 and
// a mismatch throws.
std::map<PluckerLabel, ValuationVector> plucker_valuation_table(const CartanType& t, int k,
                                                                bool check_fixture = false);
std::string valuation_table_csv(const CartanType& t, int k);

namespace fixtures {
// label -> digit string rows of the embedded valuation tables
const std::vector<std::pair<std::string, std::string>>& valuation_fixture(const CartanType& t);
}  // namespace fixtures

struct Facet {
  std::vector<mpz_class> normal;  // integer, gcd-reduced
  mpz_class offset;               // normal . x <= offset
  uint64_t incidence = 0;         // input points with equality (<= 64 points)
};

struct Polytope {
  std::vector<Point> points;
  int ambient = 0;
  int dim = -1;                 // affine dimension
  std::vector<Facet> facets;    // valid when dim == ambient
  std::string hrep_to_string() const;
};

// Exact double-description hull. Requires at most 64 input points.
Polytope hull(const std::vector<Point>& points);

int affine_dimension(const std::vector<Point>& points);

// Normalized lattice volume (d! times the Euclidean volume). Throws
// std::domain_error naming the affine dimension for degenerate input.
mpq_class hull_volume(const std::vector<Point>& points);

// Face counts by dimension 0..d-1. face_budget bounds the number of faces
// visited; exceeding it throws std::runtime_error (resource limit).
std::vector<long> f_vector(const std::vector<Point>& points, long face_budget = 2'000'000);

// All 0/1 vectors satisfying the H-representation. Points must lie in the
// unit cube.
std::vector<Point> zero_one_lattice_points(const Polytope& p);

// The Newton-Okounkov input: the valuation table rows of (t, k) as points.
std::vector<Point> valuation_points(const CartanType& t, int k);

}  // namespace cominus

#endif
