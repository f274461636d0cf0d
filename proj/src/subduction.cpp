#include "cominus/subduction.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cominus {

std::string valuation_to_string(const ValuationVector& v) {
  std::string s;
  for (int x : v) {
    if (x < 0 || x > 9) throw std::domain_error("valuation digit out of range");
    s += static_cast<char>('0' + x);
  }
  return s;
}

std::pair<mpz_class, ValuationVector> min_term(const TorusPoly& p) {
  if (p.is_zero()) throw std::domain_error("minimal term of the zero polynomial");
  const auto& [e, c] = *p.terms.begin();
  return {c, ValuationVector(e.begin(), e.end())};
}

ValuationVector valuation(const TorusPoly& p) { return min_term(p).second; }

namespace {

// minimal-term exponent vector -> Plucker label, for all diagram labels;
// injective for the supported types (asserted at build).
const std::map<ExpVec, PluckerLabel>& min_term_index(const CartanType& t, int k) {
  static std::map<std::pair<std::string, int>, std::map<ExpVec, PluckerLabel>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t.name(), k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::map<ExpVec, PluckerLabel> index;
  const WeightDiagram& d = plucker_diagram(t, k);
  for (int v = 0; v < d.num_vertices(); ++v) {
    TorusPoly p = expand_plucker(t, k, d.labels[v]);
    ExpVec e = p.terms.begin()->first;
    if (!index.emplace(e, d.labels[v]).second)
      throw std::runtime_error("minimal-term index is not injective for " + t.name());
  }
  return cache.emplace(key, std::move(index)).first->second;
}

}  // namespace

SubductionResult subduce(const CartanType& t, int k, const TorusPoly& target,
                         long iteration_limit) {
  const auto& index = min_term_index(t, k);
  if (iteration_limit <= 0) iteration_limit = 10L * std::max(1, target.num_terms());
  int l = target.nvars;

  SubductionResult res;
  TorusPoly rem = target;
  long iter = 0;
  while (!rem.is_zero()) {
    if (++iter > iteration_limit)
      throw std::runtime_error("IterationLimit: subduction did not terminate within " +
                               std::to_string(iteration_limit) + " steps");
    auto [coeff, lead] = min_term(rem);
    int m = 0;
    for (int x : lead) m = std::max(m, x);
    SubductionStep step;
    step.minimal = lead;
    step.coeff = coeff;
    // L_j = product of coordinates with exponent >= j, matched to a Plucker
    // coordinate by its minimal term
    TorusPoly prod_expansion = TorusPoly::constant(l, 1);
    for (int j = 1; j <= m; ++j) {
      ExpVec lj(l, 0);
      for (int x = 0; x < l; ++x) lj[x] = lead[x] >= j ? 1 : 0;
      auto it = index.find(lj);
      if (it == index.end())
        throw std::runtime_error("NoMatchingPlucker: L_" + std::to_string(j) +
                                 " is no coordinate's minimal term");
      step.product.push_back(it->second);
    }
    PluckerPoly mono;
    mono.add_term(step.product, step.coeff);
    res.expression += mono;
    for (const auto& lbl : step.product)
      prod_expansion = prod_expansion * expand_plucker(t, k, lbl);
    rem -= prod_expansion * step.coeff;
    res.steps.push_back(std::move(step));
  }
  return res;
}

}  // namespace cominus
