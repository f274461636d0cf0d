#ifndef COMINUS_PLUCKER_HPP
#define COMINUS_PLUCKER_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cominus/expansion.hpp"
#include "cominus/minuscule.hpp"

namespace cominus {

// Exact integer polynomial in named Plucker coordinates.
struct PluckerPoly {
  std::map<std::vector<PluckerLabel>, mpz_class> terms;  // sorted label multiset -> coeff

  bool is_zero() const { return terms.empty(); }
  void add_term(std::vector<PluckerLabel> mono, const mpz_class& c);
  PluckerPoly& operator+=(const PluckerPoly& o);
  PluckerPoly& operator-=(const PluckerPoly& o);
  PluckerPoly operator+(const PluckerPoly& o) const;
  PluckerPoly operator-(const PluckerPoly& o) const;
  PluckerPoly operator*(const PluckerPoly& o) const;
  bool operator==(const PluckerPoly& o) const { return terms == o.terms; }

  static PluckerPoly variable(const PluckerLabel& l);
  static PluckerPoly constant(const mpz_class& c);

  std::string to_string() const;  // "+ p1*p7' - p2*p6' ..."
  std::string to_json() const;
};

// Parse "p1*p11'' - p0*p12''" style expressions; identifiers starting with q
// are resolved through env.
PluckerPoly parse_plucker_poly(const std::string& text,
                               const std::map<std::string, PluckerPoly>& env);

struct SuperpotentialTerm {
  std::string num, den;        // names into the table
  bool quantum = false;
  std::vector<int> expected;   // pinned torus variables of the quotient (classical terms)
};

struct PluckerTables {
  std::map<std::string, PluckerPoly> polys;                    // named q-polynomials
  std::vector<std::pair<std::string, PluckerPoly>> relations;  // p-label = polynomial
  std::vector<SuperpotentialTerm> potential;
  std::vector<std::string> minor_names;  // index i-1 -> name of the wP^{-1}-minor polynomial
  const PluckerPoly& poly(const std::string& name) const;
};

const PluckerTables& builtin_tables(const CartanType& t);
// Raw table text, for the transcription checksum test.
const std::string& builtin_tables_text(const CartanType& t);

TorusPoly eval_on_torus(const CartanType& t, int k, const PluckerPoly& p);

// Prop. 3.1: inversion root beta_(m) of wP matched to the vertex of weight
// -varpi_k + beta_(m); keys m = 1..l(wP).
std::map<int, PluckerLabel> gls_correspondence(const CartanType& t, int k);

// Sum over reduced subexpressions of w' in wP of the corresponding monomials.
TorusPoly quantum_numerator(const CartanType& t, int k);

struct PotentialReport {
  struct Term {
    std::string num, den;
    bool quantum = false;
    bool pass = false;
    std::string value;  // the Laurent quotient (classical) or numerator (quantum)
  };
  std::vector<Term> terms;
  bool partition_ok = false;
  bool pass = false;
};

PotentialReport verify_superpotential(const CartanType& t, int k);

struct RelationReport {
  struct Item {
    std::string name;
    bool pass = false;
  };
  std::vector<Item> items;
  bool pass = false;
};

// Checks every builtin relation as a TorusPoly identity.
RelationReport verify_relations(const CartanType& t, int k);

}  // namespace cominus

#endif
