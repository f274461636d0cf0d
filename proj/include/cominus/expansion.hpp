#ifndef COMINUS_EXPANSION_HPP
#define COMINUS_EXPANSION_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cominus/minuscule.hpp"
#include "cominus/rootdata.hpp"

namespace cominus {

using ExpVec = std::vector<uint8_t>;

// The graded term order with a_1 > a_2 > ... > a_l that the worked subduction
// and the valuation tables pin down: lower total degree first; on equal
// degrees the exponent vectors are compared from a_l backwards and the first
// difference with the higher exponent is the smaller monomial (graded
// reverse-lexicographic). begin() of a map under this comparator is the
// <-minimal term of the subduction algorithm.
struct DegLexLess {
  bool operator()(const ExpVec& x, const ExpVec& y) const {
    long dx = 0, dy = 0;
    for (auto v : x) dx += v;
    for (auto v : y) dy += v;
    if (dx != dy) return dx < dy;
    for (size_t i = x.size(); i-- > 0;)
      if (x[i] != y[i]) return x[i] > y[i];
    return false;
  }
};

// Exact integer polynomial in torus coordinates a_1..a_nvars.
struct TorusPoly {
  int nvars = 0;
  std::map<ExpVec, mpz_class, DegLexLess> terms;

  static TorusPoly zero(int nvars) { return TorusPoly{nvars, {}}; }
  static TorusPoly constant(int nvars, const mpz_class& c);
  static TorusPoly monomial(int nvars, const ExpVec& e, const mpz_class& c = 1);

  bool is_zero() const { return terms.empty(); }
  int num_terms() const { return static_cast<int>(terms.size()); }
  long total_degree() const;  // requires homogeneity for a meaningful answer
  bool is_homogeneous() const;

  void add_term(const ExpVec& e, const mpz_class& c);
  TorusPoly& operator+=(const TorusPoly& o);
  TorusPoly& operator-=(const TorusPoly& o);
  TorusPoly operator+(const TorusPoly& o) const;
  TorusPoly operator-(const TorusPoly& o) const;
  TorusPoly operator*(const TorusPoly& o) const;
  TorusPoly operator*(const mpz_class& c) const;
  bool operator==(const TorusPoly& o) const { return nvars == o.nvars && terms == o.terms; }

  std::string to_string() const;  // "c * a3 a5^2 ..." terms ascending in deg-lex
  std::string to_json() const;
};

// Sum of single variables a_{j} for j in idx (1-based); convenience for the
// superpotential term fixtures.
TorusPoly var_sum(int nvars, const std::vector<int>& idx);

// Algorithm 2: torus expansion of a Plucker coordinate of G/P_k over the
// fixed torus of the wP word; all coefficients are +1.
TorusPoly expand_plucker(const CartanType& t, int k, const PluckerLabel& label);
TorusPoly expand_plucker(const CartanType& t, int k, const std::string& label);

// Exact division; throws std::domain_error when den does not divide num.
TorusPoly exact_divide(const TorusPoly& num, const TorusPoly& den);

}  // namespace cominus

#endif
