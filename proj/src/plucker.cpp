#include "cominus/plucker.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cominus {

void PluckerPoly::add_term(std::vector<PluckerLabel> mono, const mpz_class& c) {
  if (c == 0) return;
  std::sort(mono.begin(), mono.end());
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms.emplace(std::move(mono), c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

PluckerPoly& PluckerPoly::operator+=(const PluckerPoly& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

PluckerPoly& PluckerPoly::operator-=(const PluckerPoly& o) {
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

PluckerPoly PluckerPoly::operator+(const PluckerPoly& o) const {
  PluckerPoly r = *this;
  r += o;
  return r;
}

PluckerPoly PluckerPoly::operator-(const PluckerPoly& o) const {
  PluckerPoly r = *this;
  r -= o;
  return r;
}

PluckerPoly PluckerPoly::operator*(const PluckerPoly& o) const {
  PluckerPoly r;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms) {
      std::vector<PluckerLabel> m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(std::move(m), c1 * c2);
    }
  return r;
}

PluckerPoly PluckerPoly::variable(const PluckerLabel& l) {
  PluckerPoly p;
  p.terms[{l}] = 1;
  return p;
}

PluckerPoly PluckerPoly::constant(const mpz_class& c) {
  PluckerPoly p;
  if (c != 0) p.terms[{}] = c;
  return p;
}

std::string PluckerPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    mpz_class a = abs(c);
    os << (c < 0 ? (first ? "- " : " - ") : (first ? "" : " + "));
    first = false;
    bool need_star = false;
    if (a != 1 || m.empty()) {
      os << a.get_str();
      need_star = true;
    }
    for (const auto& l : m) {
      if (need_star) os << "*";
      os << label_to_string(l);
      need_star = true;
    }
  }
  return os.str();
}

std::string PluckerPoly::to_json() const {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << ",";
    first = false;
    os << "{\"coeff\":" << c.get_str() << ",\"labels\":[";
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) os << ",";
      os << "\"" << label_to_string(m[i]) << "\"";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::map<std::string, PluckerPoly>& env;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  PluckerPoly expr() {
    PluckerPoly out;
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    out = term() * PluckerPoly::constant(sign);
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        out += term();
      } else if (c == '-') {
        ++pos;
        out -= term();
      } else {
        break;
      }
    }
    return out;
  }

  PluckerPoly term() {
    PluckerPoly out = factor();
    while (eat('*')) out = out * factor();
    return out;
  }

  PluckerPoly factor() {
    skip();
    if (eat('(')) {
      PluckerPoly e = expr();
      if (!eat(')')) throw std::invalid_argument("expected ')' in " + s);
      return e;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return PluckerPoly::constant(mpz_class(s.substr(start, pos - start)));
    }
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '\'')) ++pos;
    std::string name = s.substr(start, pos - start);
    if (name.empty()) throw std::invalid_argument("parse error in " + s);
    if (name[0] == 'p') return PluckerPoly::variable(label_from_string(name));
    auto it = env.find(name);
    if (it == env.end()) throw std::invalid_argument("unknown name " + name);
    return it->second;
  }
};

std::vector<int> parse_var_sum(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "+") continue;
    if (tok[0] != 'a') throw std::invalid_argument("bad torus sum: " + text);
    out.push_back(std::stoi(tok.substr(1)));
  }
  return out;
}

PluckerTables parse_tables(const std::string& text) {
  PluckerTables tab;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "rel") {
      std::string lhs, eq;
      ls >> lhs >> eq;
      std::string rest;
      std::getline(ls, rest);
      tab.relations.emplace_back(lhs, parse_plucker_poly(rest, tab.polys));
    } else if (head == "pot" || head == "qpot") {
      std::string num, slash, den;
      ls >> num >> slash >> den;
      SuperpotentialTerm term;
      term.num = num;
      term.den = den;
      term.quantum = head == "qpot";
      if (!term.quantum) {
        std::string eq, rest;
        ls >> eq;
        std::getline(ls, rest);
        term.expected = parse_var_sum(rest);
      }
      tab.potential.push_back(std::move(term));
    } else if (head == "minors") {
      std::string name;
      while (ls >> name) tab.minor_names.push_back(name);
    } else {
      std::string eq, rest;
      ls >> eq;
      std::getline(ls, rest);
      PluckerPoly p = parse_plucker_poly(rest, tab.polys);
      tab.polys[head] = std::move(p);
    }
  }
  return tab;
}

}  // namespace

PluckerPoly parse_plucker_poly(const std::string& text,
                               const std::map<std::string, PluckerPoly>& env) {
  Parser p{text, 0, env};
  PluckerPoly out = p.expr();
  p.skip();
  if (p.pos != text.size()) throw std::invalid_argument("trailing input in " + text);
  return out;
}

const PluckerPoly& PluckerTables::poly(const std::string& name) const {
  static std::map<std::string, PluckerPoly> label_cache;
  static std::mutex mu;
  if (!name.empty() && name[0] == 'p') {
    std::lock_guard<std::mutex> lock(mu);
    auto it = label_cache.find(name);
    if (it == label_cache.end())
      it = label_cache.emplace(name, PluckerPoly::variable(label_from_string(name))).first;
    return it->second;
  }
  auto it = polys.find(name);
  if (it == polys.end()) throw std::invalid_argument("unknown polynomial " + name);
  return it->second;
}

const PluckerTables& builtin_tables(const CartanType& t) {
  static std::map<std::string, PluckerTables> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.name());
  if (it == cache.end()) it = cache.emplace(t.name(), parse_tables(builtin_tables_text(t))).first;
  return it->second;
}

TorusPoly eval_on_torus(const CartanType& t, int k, const PluckerPoly& p) {
  static std::map<std::tuple<std::string, int, PluckerLabel>, TorusPoly> cache;
  static std::mutex mu;
  int l = static_cast<int>(fixed_words(t, k).wP.size());
  TorusPoly out = TorusPoly::zero(l);
  for (const auto& [mono, c] : p.terms) {
    TorusPoly prod = TorusPoly::constant(l, c);
    for (const auto& lbl : mono) {
      TorusPoly expanded;
      {
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_tuple(t.name(), k, lbl);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, expand_plucker(t, k, lbl)).first;
        expanded = it->second;
      }
      prod = prod * expanded;
    }
    out += prod;
  }
  return out;
}

std::map<int, PluckerLabel> gls_correspondence(const CartanType& t, int k) {
  const WeightDiagram& d = plucker_diagram(t, k);
  const WeylWord& wp = fixed_words(t, k).wP;
  auto betas = inversion_roots(t, wp);
  Weight lowest = d.weights[d.sink];
  std::map<int, PluckerLabel> out;
  for (size_t m = 0; m < betas.size(); ++m) {
    Weight w = lowest;
    for (int r = 0; r < t.rank; ++r)
      for (int j = 0; j < t.rank; ++j) w[r] += t.cartan[r][j] * betas[m][j];
    int v = d.vertex_by_weight(w);
    if (v < 0)
      throw std::logic_error("no vertex of weight -varpi_k + beta_(m); Lemma 3.0 violated");
    out[static_cast<int>(m) + 1] = d.labels[v];
  }
  return out;
}

TorusPoly quantum_numerator(const CartanType& t, int k) {
  const WeylWord& wp = fixed_words(t, k).wP;
  int l = static_cast<int>(wp.size());
  WeylWord wprime = w_prime(t, k);
  TorusPoly out = TorusPoly::zero(l);
  for (const auto& subset : reduced_subexpressions(t, wprime, wp)) {
    ExpVec e(l, 0);
    for (int pos : subset) e[pos] = 1;
    out.add_term(e, 1);
  }
  return out;
}

PotentialReport verify_superpotential(const CartanType& t, int k) {
  const PluckerTables& tab = builtin_tables(t);
  int l = static_cast<int>(fixed_words(t, k).wP.size());
  PotentialReport rep;
  rep.pass = true;
  std::vector<int> used;
  for (const auto& term : tab.potential) {
    PotentialReport::Term r;
    r.num = term.num;
    r.den = term.den;
    r.quantum = term.quantum;
    TorusPoly num = eval_on_torus(t, k, tab.poly(term.num));
    TorusPoly den = eval_on_torus(t, k, tab.poly(term.den));
    if (!term.quantum) {
      try {
        TorusPoly q = exact_divide(num, den);
        r.value = q.to_string();
        r.pass = q == var_sum(l, term.expected);
      } catch (const std::domain_error&) {
        r.value = "inexact";
        r.pass = false;
      }
      used.insert(used.end(), term.expected.begin(), term.expected.end());
    } else {
      // the quantum denominator restricts to the full torus monomial a_1...a_l
      bool den_ok = den == TorusPoly::monomial(l, ExpVec(l, 1));
      r.pass = den_ok && num == quantum_numerator(t, k);
      r.value = "numerator = w'-subexpression sum, " + std::to_string(num.num_terms()) + " terms";
    }
    rep.pass &= r.pass;
    rep.terms.push_back(std::move(r));
  }
  std::sort(used.begin(), used.end());
  std::vector<int> expect(l);
  for (int i = 0; i < l; ++i) expect[i] = i + 1;
  rep.partition_ok = used == expect;
  rep.pass &= rep.partition_ok;
  return rep;
}

RelationReport verify_relations(const CartanType& t, int k) {
  const PluckerTables& tab = builtin_tables(t);
  RelationReport rep;
  rep.pass = true;
  for (const auto& [lhs, rhs] : tab.relations) {
    RelationReport::Item item;
    item.name = lhs;
    TorusPoly l = eval_on_torus(t, k, tab.poly(lhs));
    TorusPoly r = eval_on_torus(t, k, rhs);
    item.pass = l == r;
    rep.pass &= item.pass;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

}  // namespace cominus
