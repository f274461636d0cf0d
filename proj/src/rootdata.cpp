#include "cominus/rootdata.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cominus {

CartanType CartanType::make(char series, int rank) {
  CartanType t;
  t.series = series;
  t.rank = rank;
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  std::vector<std::pair<int, int>> edges;
  switch (series) {
    case 'A':
      for (int i = 1; i < rank; ++i) edges.push_back({i, i + 1});
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("D requires rank >= 3");
      for (int i = 1; i < rank - 1; ++i) edges.push_back({i, i + 1});
      edges.push_back({rank - 2, rank});
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("E requires rank 6..8");
      // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
      edges.push_back({1, 3});
      for (int i = 3; i < rank; ++i) edges.push_back({i, i + 1});
      edges.push_back({2, 4});
      break;
    default:
      throw std::invalid_argument("unknown series");
  }
  t.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) t.cartan[i][i] = 2;
  for (auto [i, j] : edges) {
    t.cartan[i - 1][j - 1] = -1;
    t.cartan[j - 1][i - 1] = -1;
  }
  return t;
}

CartanType CartanType::parse(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad type name: " + name);
  return make(name[0], std::stoi(name.substr(1)));
}

std::string CartanType::name() const { return std::string(1, series) + std::to_string(rank); }

Weight CartanType::fundamental(int k) const {
  Weight w(rank, 0);
  w[k - 1] = 1;
  return w;
}

Weight CartanType::simple_root_weight(int i) const {
  Weight w(rank);
  for (int r = 0; r < rank; ++r) w[r] = cartan[r][i - 1];
  return w;
}

WeylElt WeylElt::identity(int rank) {
  WeylElt e;
  e.mat.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) e.mat[i][i] = 1;
  return e;
}

bool WeylElt::is_identity() const {
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < mat.size(); ++j)
      if (mat[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

RootVector WeylElt::apply(const RootVector& beta) const {
  int n = static_cast<int>(mat.size());
  RootVector out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (beta[j] == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += mat[i][j] * beta[j];
  }
  return out;
}

Weight reflect(const CartanType& t, int i, const Weight& mu) {
  if (i < 1 || i > t.rank) throw std::out_of_range("simple index out of range");
  int c = mu[i - 1];
  if (c == 0) return mu;
  Weight out = mu;
  for (int r = 0; r < t.rank; ++r) out[r] -= c * t.cartan[r][i - 1];
  return out;
}

Weight apply_word(const CartanType& t, const WeylWord& w, const Weight& mu) {
  Weight cur = mu;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = reflect(t, *it, cur);
  return cur;
}

WeylElt simple_reflection(const CartanType& t, int i) {
  WeylElt s = WeylElt::identity(t.rank);
  // s_i(alpha_j) = alpha_j - a_{ij} alpha_i
  for (int j = 0; j < t.rank; ++j) s.mat[i - 1][j] -= t.cartan[i - 1][j];
  return s;
}

WeylElt compose(const WeylElt& a, const WeylElt& b) {
  int n = static_cast<int>(a.mat.size());
  WeylElt c;
  c.mat.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int v = a.mat[i][k];
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) c.mat[i][j] += v * b.mat[k][j];
    }
  return c;
}

WeylElt word_to_elt(const CartanType& t, const WeylWord& w) {
  WeylElt e = WeylElt::identity(t.rank);
  for (int letter : w) e = compose(e, simple_reflection(t, letter));
  return e;
}

WeylElt inverse(const WeylElt& a) {
  // Weyl matrices in the root basis are integer with integer inverse; for our
  // sizes a cofactor-free approach via word reconstruction would be slower, so
  // do fraction-free Gauss-Jordan knowing the determinant is +-1.
  int n = static_cast<int>(a.mat.size());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.mat[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] == 1 || m[r][col] == -1) { piv = r; break; }
    if (piv < 0) {
      for (int r = col; r < n; ++r)
        if (m[r][col] != 0) { piv = r; break; }
    }
    if (piv < 0) throw std::runtime_error("singular Weyl matrix");
    std::swap(m[col], m[piv]);
    // scale row to make pivot 1 (pivot must divide the row for unimodular input)
    long long p = m[col][col];
    if (p != 1) {
      for (auto& v : m[col]) {
        if (v % p != 0) throw std::runtime_error("non-unimodular Weyl matrix");
        v /= p;
      }
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      long long f = m[r][col];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  WeylElt out;
  out.mat.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.mat[i][j] = static_cast<int>(m[i][n + j]);
  return out;
}

const std::vector<RootVector>& positive_roots(const CartanType& t) {
  static std::map<std::string, std::vector<RootVector>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.name());
  if (it != cache.end()) return it->second;

  std::set<RootVector> seen;
  std::vector<RootVector> queue;
  for (int i = 1; i <= t.rank; ++i) {
    RootVector a(t.rank, 0);
    a[i - 1] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  // close under simple reflections, keeping positives
  for (size_t q = 0; q < queue.size(); ++q) {
    RootVector beta = queue[q];
    for (int i = 1; i <= t.rank; ++i) {
      // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i; pairing = sum_j a_ij beta_j
      int c = 0;
      for (int j = 0; j < t.rank; ++j) c += t.cartan[i - 1][j] * beta[j];
      RootVector im = beta;
      im[i - 1] -= c;
      if (is_positive_root_vector(im) && !seen.count(im)) {
        seen.insert(im);
        queue.push_back(im);
      }
    }
  }
  std::sort(queue.begin(), queue.end(), [](const RootVector& x, const RootVector& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return cache.emplace(t.name(), std::move(queue)).first->second;
}

bool is_positive_root_vector(const RootVector& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

int length(const CartanType& t, const WeylElt& w) {
  int count = 0;
  for (const auto& beta : positive_roots(t))
    if (!is_positive_root_vector(w.apply(beta))) ++count;
  return count;
}

bool is_reduced(const CartanType& t, const WeylWord& w) {
  return length(t, word_to_elt(t, w)) == static_cast<int>(w.size());
}

WeylWord reduced_word(const CartanType& t, WeylElt w) {
  WeylWord out;
  WeylElt winv = inverse(w);
  while (!w.is_identity()) {
    int found = 0;
    for (int i = 1; i <= t.rank; ++i) {
      // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0
      RootVector a(t.rank, 0);
      a[i - 1] = 1;
      if (!is_positive_root_vector(winv.apply(a))) { found = i; break; }
    }
    if (!found) throw std::runtime_error("descent search failed");
    out.push_back(found);
    WeylElt s = simple_reflection(t, found);
    w = compose(s, w);
    winv = compose(winv, s);
  }
  return out;
}

std::vector<int> minuscule_indices(const CartanType& t) {
  switch (t.series) {
    case 'A': {
      std::vector<int> all(t.rank);
      for (int i = 0; i < t.rank; ++i) all[i] = i + 1;
      return all;
    }
    case 'D':
      return {1, t.rank - 1, t.rank};
    case 'E':
      if (t.rank == 6) return {1, 6};
      if (t.rank == 7) return {7};
      return {};
  }
  return {};
}

bool is_minuscule(const CartanType& t, int k) {
  auto v = minuscule_indices(t);
  return std::find(v.begin(), v.end(), k) != v.end();
}

namespace {

// Longest element as a word: greedy ascent from the identity restricted to the
// given generator subset (1-based indices).
WeylWord longest_word(const CartanType& t, const std::vector<int>& gens) {
  WeylWord word;
  WeylElt w = WeylElt::identity(t.rank);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : gens) {
      // l(w s_i) > l(w) iff w(alpha_i) > 0
      RootVector a(t.rank, 0);
      a[i - 1] = 1;
      if (is_positive_root_vector(w.apply(a))) {
        word.push_back(i);
        w = compose(w, simple_reflection(t, i));
        progress = true;
      }
    }
  }
  return word;
}

// Minimal-length representative of the coset w W_P: strip right descents that
// lie in the parabolic generator set.
WeylElt min_coset_rep(const CartanType& t, WeylElt w, const std::vector<int>& pgens) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j : pgens) {
      RootVector a(t.rank, 0);
      a[j - 1] = 1;
      if (!is_positive_root_vector(w.apply(a))) {  // l(w s_j) < l(w)
        w = compose(w, simple_reflection(t, j));
        progress = true;
      }
    }
  }
  return w;
}

// Deterministic reduced word for wP: walk the minuscule orbit down from
// varpi_k, always taking the smallest available lowering index. The walk
// letters, first step rightmost, spell wP.
WeylWord computed_wp_word(const CartanType& t, int k) {
  Weight mu = t.fundamental(k);
  Weight lowest = apply_word(t, longest_word(t, [&] {
                    std::vector<int> all(t.rank);
                    for (int i = 0; i < t.rank; ++i) all[i] = i + 1;
                    return all;
                  }()),
                  mu);
  WeylWord walk;
  while (mu != lowest) {
    int step = 0;
    for (int i = 1; i <= t.rank; ++i)
      if (mu[i - 1] > 0) { step = i; break; }
    if (!step) throw std::runtime_error("minuscule walk stuck");
    mu = reflect(t, step, mu);
    walk.push_back(step);
  }
  return WeylWord(walk.rbegin(), walk.rend());
}

const WeylWord kE6wP = {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6};
const WeylWord kE7wP = {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 2, 5, 7,
                        4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6, 7};
// Longest-word expressions fixed for the cluster seeds, displayed order
// s_{r_{l0}} ... s_{r_1}.
const WeylWord kE6w0 = {1, 2, 3, 1, 4, 3, 1, 2, 4, 3, 5, 4, 2, 3, 4, 5, 1, 3,
                        4, 2, 6, 5, 4, 2, 3, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1};
const WeylWord kE7w0 = {1, 2, 3, 1, 4, 2, 3, 1, 4, 3, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6,
                        5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 3, 2,
                        4, 5, 6, 1, 3, 4, 7, 5, 2, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6, 7};

}  // namespace

FixedWords fixed_words(const CartanType& t, int k) {
  if (!is_minuscule(t, k)) throw std::invalid_argument("not a cominuscule index");
  FixedWords out;
  if (t.series == 'E' && t.rank == 6 && k == 6) {
    out.wP = kE6wP;
    out.w0 = kE6w0;
  } else if (t.series == 'E' && t.rank == 7 && k == 7) {
    out.wP = kE7wP;
    out.w0 = kE7w0;
  } else {
    out.wP = computed_wp_word(t, k);
    std::vector<int> pgens;
    for (int i = 1; i <= t.rank; ++i)
      if (i != k) pgens.push_back(i);
    out.wop = longest_word(t, pgens);
    out.w0.assign(out.wop.rbegin(), out.wop.rend());
    for (auto it = out.wP.rbegin(); it != out.wP.rend(); ++it) out.w0.push_back(*it);
    return out;
  }
  // wop from the fixed w0: its first l0-lP letters spell wop^{-1}
  size_t lp = out.wP.size();
  size_t lop = out.w0.size() - lp;
  out.wop.assign(out.w0.rend() - lop, out.w0.rend());
  return out;
}

std::vector<RootVector> inversion_roots(const CartanType& t, const WeylWord& word) {
  if (!is_reduced(t, word)) throw std::invalid_argument("word is not reduced");
  size_t l = word.size();
  std::vector<RootVector> out;
  out.reserve(l);
  WeylElt prefix = WeylElt::identity(t.rank);  // s_{r_l} s_{r_{l-1}} ...
  for (size_t j = 0; j < l; ++j) {
    int letter = word[l - 1 - j];
    RootVector a(t.rank, 0);
    a[letter - 1] = 1;
    out.push_back(prefix.apply(a));
    prefix = compose(prefix, simple_reflection(t, letter));
  }
  return out;
}

WeylWord w_prime(const CartanType& t, int k) {
  if (!is_minuscule(t, k)) throw std::invalid_argument("not a cominuscule index");
  FixedWords fw = fixed_words(t, k);
  std::vector<int> pgens;
  for (int i = 1; i <= t.rank; ++i)
    if (i != k) pgens.push_back(i);
  WeylElt wop = word_to_elt(t, fw.wop);
  WeylElt u = compose(wop, simple_reflection(t, k));
  WeylElt wpp = min_coset_rep(t, u, pgens);
  WeylElt wp = word_to_elt(t, fw.wP);
  WeylElt wprime = compose(wp, inverse(wpp));
  return reduced_word(t, wprime);
}

std::vector<std::vector<int>> reduced_subexpressions(const CartanType& t,
                                                     const WeylWord& target,
                                                     const WeylWord& within) {
  if (!is_reduced(t, target)) throw std::invalid_argument("target is not reduced");
  WeylElt m = word_to_elt(t, target);
  std::vector<std::vector<int>> results;
  std::vector<int> chosen;
  int need = static_cast<int>(target.size());
  int n = static_cast<int>(within.size());

  // DFS over positions; state: remaining element m (need = l(m)).
  // Choosing letter s at a position requires l(s m) = l(m) - 1.
  std::function<void(int, WeylElt&, WeylElt&, int)> dfs =
      [&](int pos, WeylElt& cur, WeylElt& curinv, int remaining) {
        if (remaining == 0) {
          // rest must be skipped entirely; record
          results.push_back(chosen);
          return;
        }
        if (n - pos < remaining) return;
        if (pos == n) return;
        int letter = within[pos];
        // option: take the letter if it is a left descent of cur
        RootVector a(t.rank, 0);
        a[letter - 1] = 1;
        if (!is_positive_root_vector(curinv.apply(a))) {
          WeylElt s = simple_reflection(t, letter);
          WeylElt nxt = compose(s, cur);
          WeylElt nxtinv = compose(curinv, s);
          chosen.push_back(pos);
          dfs(pos + 1, nxt, nxtinv, remaining - 1);
          chosen.pop_back();
        }
        dfs(pos + 1, cur, curinv, remaining);
      };
  WeylElt minv = inverse(m);
  dfs(0, m, minv, need);
  std::sort(results.begin(), results.end());
  return results;
}

std::string word_to_string(const WeylWord& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

WeylWord word_from_string(const std::string& s) {
  WeylWord out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

int dual_index(const CartanType& t, int k) {
  std::vector<int> all(t.rank);
  for (int i = 0; i < t.rank; ++i) all[i] = i + 1;
  // act with w0 on varpi_k and negate
  WeylWord w0 = longest_word(t, all);
  Weight img = apply_word(t, w0, t.fundamental(k));
  for (int i = 0; i < t.rank; ++i) img[i] = -img[i];
  for (int i = 1; i <= t.rank; ++i)
    if (img == t.fundamental(i)) return i;
  throw std::runtime_error("dual index not found");
}

}  // namespace cominus
