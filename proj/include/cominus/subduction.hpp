#ifndef COMINUS_SUBDUCTION_HPP
#define COMINUS_SUBDUCTION_HPP

#include <string>
#include <vector>

#include "cominus/expansion.hpp"
#include "cominus/plucker.hpp"

namespace cominus {

using ValuationVector = std::vector<int>;

std::string valuation_to_string(const ValuationVector& v);  // digit string

// The <-minimal term of a nonzero polynomial (lower degree first, ties by
// lexicographic order with a higher a_1-exponent counting as larger).
std::pair<mpz_class, ValuationVector> min_term(const TorusPoly& p);

// Exponent vector of the minimal term.
ValuationVector valuation(const TorusPoly& p);

struct SubductionStep {
  ValuationVector minimal;            // the cancelled minimal term
  std::vector<PluckerLabel> product;  // matched Plucker coordinates L_1..L_m
  mpz_class coeff;                    // signed multiplier in the expression
};

struct SubductionResult {
  PluckerPoly expression;
  std::vector<SubductionStep> steps;
};

// Algorithm 3. Throws std::runtime_error (NoMatchingPlucker) when some L_j is
// no coordinate's minimal term, or when the iteration limit is exceeded.
SubductionResult subduce(const CartanType& t, int k, const TorusPoly& target,
                         long iteration_limit = 0);  // 0: 10 * #terms default

}  // namespace cominus

#endif
