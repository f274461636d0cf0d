#include "cominus/expansion.hpp"

#include <sstream>
#include <stdexcept>

namespace cominus {

TorusPoly TorusPoly::constant(int nvars, const mpz_class& c) {
  TorusPoly p{nvars, {}};
  if (c != 0) p.terms[ExpVec(nvars, 0)] = c;
  return p;
}

TorusPoly TorusPoly::monomial(int nvars, const ExpVec& e, const mpz_class& c) {
  TorusPoly p{nvars, {}};
  if (c != 0) p.terms[e] = c;
  return p;
}

long TorusPoly::total_degree() const {
  if (terms.empty()) return 0;
  long d = 0;
  for (auto v : terms.begin()->first) d += v;
  return d;
}

bool TorusPoly::is_homogeneous() const {
  long d = -1;
  for (const auto& [e, c] : terms) {
    long s = 0;
    for (auto v : e) s += v;
    if (d < 0) d = s;
    else if (s != d) return false;
  }
  return true;
}

void TorusPoly::add_term(const ExpVec& e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TorusPoly& TorusPoly::operator+=(const TorusPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, c);
  return *this;
}

TorusPoly& TorusPoly::operator-=(const TorusPoly& o) {
  for (const auto& [e, c] : o.terms) add_term(e, -c);
  return *this;
}

TorusPoly TorusPoly::operator+(const TorusPoly& o) const {
  TorusPoly r = *this;
  r += o;
  return r;
}

TorusPoly TorusPoly::operator-(const TorusPoly& o) const {
  TorusPoly r = *this;
  r -= o;
  return r;
}

TorusPoly TorusPoly::operator*(const TorusPoly& o) const {
  TorusPoly r{nvars, {}};
  ExpVec e(nvars);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      for (int i = 0; i < nvars; ++i) {
        int s = e1[i] + e2[i];
        if (s > 255) throw std::overflow_error("exponent overflow");
        e[i] = static_cast<uint8_t>(s);
      }
      r.add_term(e, c1 * c2);
    }
  return r;
}

TorusPoly TorusPoly::operator*(const mpz_class& c) const {
  TorusPoly r{nvars, {}};
  if (c == 0) return r;
  for (const auto& [e, k] : terms) r.terms[e] = k * c;
  return r;
}

std::string TorusPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    bool any = false;
    for (int i = 0; i < nvars; ++i)
      if (e[i]) {
        os << (any ? " " : " * ") << "a" << (i + 1);
        if (e[i] > 1) os << "^" << int(e[i]);
        any = true;
      }
  }
  return os.str();
}

std::string TorusPoly::to_json() const {
  std::ostringstream os;
  os << "{\"nvars\":" << nvars << ",\"terms\":[";
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << ",";
    first = false;
    os << "{\"coeff\":" << c.get_str() << ",\"exps\":[";
    for (int i = 0; i < nvars; ++i) {
      if (i) os << ",";
      os << int(e[i]);
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

TorusPoly var_sum(int nvars, const std::vector<int>& idx) {
  TorusPoly p{nvars, {}};
  for (int j : idx) {
    ExpVec e(nvars, 0);
    e[j - 1] = 1;
    p.add_term(e, 1);
  }
  return p;
}

TorusPoly expand_plucker(const CartanType& t, int k, const PluckerLabel& label) {
  const WeightDiagram& d = plucker_diagram(t, k);
  const WeylWord& wp = fixed_words(t, k).wP;
  int l = static_cast<int>(wp.size());
  int start = d.vertex_by_label(label);

  // u_+^T = y_{r_l}(a_l) ... y_{r_1}(a_1) acts on v_start, a_1 factor first.
  // dp[v] after scanning positions j..l = sum of monomials landing on the sink.
  std::vector<TorusPoly> dp(d.num_vertices(), TorusPoly::zero(l));
  dp[d.sink] = TorusPoly::constant(l, 1);
  for (int j = l; j >= 1; --j) {
    int letter = wp[j - 1];
    // process position j: new[v] = dp[v] + a_j * dp[down_letter(v)]
    std::vector<TorusPoly> nxt = dp;
    for (int v = 0; v < d.num_vertices(); ++v) {
      int c = d.down[v][letter - 1];
      if (c < 0 || dp[c].is_zero()) continue;
      ExpVec e(l, 0);
      e[j - 1] = 1;
      nxt[v] += dp[c] * TorusPoly::monomial(l, e);
    }
    dp = std::move(nxt);
  }
  return dp[start];
}

TorusPoly expand_plucker(const CartanType& t, int k, const std::string& label) {
  return expand_plucker(t, k, label_from_string(label));
}

TorusPoly exact_divide(const TorusPoly& num, const TorusPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  TorusPoly rem = num;
  TorusPoly q = TorusPoly::zero(num.nvars);
  const auto& [de, dc] = *den.terms.begin();
  long dmin = 0;
  for (auto v : de) dmin += v;
  long qmax = -dmin;
  for (const auto& [e, c] : num.terms) {
    long s = 0;
    for (auto v : e) s += v;
    qmax = std::max(qmax, s - dmin);
  }
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms.begin();
    long rdeg = 0;
    for (auto v : re) rdeg += v;
    if (rdeg - dmin > qmax) throw std::domain_error("inexact division");
    ExpVec e(rem.nvars);
    for (int i = 0; i < rem.nvars; ++i) {
      if (re[i] < de[i]) throw std::domain_error("inexact division (monomial)");
      e[i] = static_cast<uint8_t>(re[i] - de[i]);
    }
    mpz_class c = rc / dc;
    if (c * dc != rc) throw std::domain_error("inexact division (coefficient)");
    TorusPoly qt = TorusPoly::monomial(rem.nvars, e, c);
    q += qt;
    rem -= qt * den;
  }
  return q;
}

}  // namespace cominus
