#include "cominus/repspace.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cominus {

namespace {

Weight add_w(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight sub_w(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

// ---------------------------------------------------------------------------
// Minuscule realization: the weight diagram with +1 structure constants.

class MinusculeModule final : public Module {
 public:
  MinusculeModule(const CartanType& t, int k) : t_(t), k_(k), d_(&build_diagram(t, k)) {}

  Realization realization() const override { return Realization::Minuscule; }
  const CartanType& type() const override { return t_; }

  Weight weight(const BasisLabel& b) const override { return d_->weights[b[0]]; }

  void apply_e(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    int u = d_->up[b[0]][i - 1];
    if (u >= 0) out.push_back({{u}, Rat(1)});
  }
  void apply_f(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    int v = d_->down[b[0]][i - 1];
    if (v >= 0) out.push_back({{v}, Rat(1)});
  }

  std::vector<BasisLabel> weight_slice(const Weight& w) const override {
    int v = d_->vertex_by_weight(w);
    if (v < 0) return {};
    return {{v}};
  }

  int max_string_length() const override { return 1; }
  int dim() const { return d_->num_vertices(); }
  std::string describe() const override {
    return "V(w" + std::to_string(k_) + ") of " + t_.name();
  }
  const WeightDiagram* diagram() const { return d_; }

 private:
  CartanType t_;
  int k_;
  const WeightDiagram* d_;
};

// ---------------------------------------------------------------------------
// Adjoint realization via a Chevalley basis. Structure-constant signs come
// from the bimultiplicative asymmetry function with eps(a_i,a_i) = -1 and
// eps(a_i,a_j) = -1 exactly when i < j and a_ij = -1.

class AdjointModule final : public Module {
 public:
  explicit AdjointModule(const CartanType& t) : t_(t) {
    const auto& pos = positive_roots(t);
    np_ = static_cast<int>(pos.size());
    roots_.reserve(2 * np_);
    for (const auto& b : pos) roots_.push_back(b);
    for (const auto& b : pos) {
      RootVector neg = b;
      for (auto& x : neg) x = -x;
      roots_.push_back(neg);
    }
    for (int r = 0; r < 2 * np_; ++r) root_index_[roots_[r]] = r;
  }

  Realization realization() const override { return Realization::Adjoint; }
  const CartanType& type() const override { return t_; }

  // labels: 0..2np-1 root vectors E_beta, 2np..2np+rank-1 cartan h_i
  int dim() const { return 2 * np_ + t_.rank; }
  bool is_cartan(int id) const { return id >= 2 * np_; }

  Weight weight(const BasisLabel& b) const override {
    int id = b[0];
    Weight w(t_.rank, 0);
    if (is_cartan(id)) return w;
    const RootVector& beta = roots_[id];
    for (int r = 0; r < t_.rank; ++r)
      for (int j = 0; j < t_.rank; ++j) w[r] += t_.cartan[r][j] * beta[j];
    return w;
  }

  int eps_parity(const RootVector& a, const RootVector& b) const {
    int par = 0;
    for (int i = 1; i <= t_.rank; ++i) {
      if (a[i - 1] == 0) continue;
      for (int j = 1; j <= t_.rank; ++j) {
        if (b[j - 1] == 0) continue;
        bool neg = (i == j) || (i < j && t_.cartan[i - 1][j - 1] < 0);
        if (neg) par ^= (a[i - 1] * b[j - 1]) & 1;
      }
    }
    return par;
  }

  // Chevalley generator action: e_i = ad(E_{alpha_i}), f_i = -ad(E_{-alpha_i}).
  // With the asymmetry function normalized by eps(a,a) = -1 on roots, the
  // bracket [E_a, E_{-a}] = -h_a, and the extra sign on f_i restores the
  // sl2 triples [e_i, f_i] = h_i (checked by the structure-constant tests).
  void apply_ad(int i, int s, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const {
    int id = b[0];
    int g = s < 0 ? -1 : 1;  // generator twist for f_i
    RootVector ai(t_.rank, 0);
    ai[i - 1] = s;
    if (is_cartan(id)) {
      // [E_{s a_i}, h_j] = -s a_{ji} E_{s a_i}
      int j = id - 2 * np_ + 1;
      int c = g * -s * t_.cartan[j - 1][i - 1];
      if (c != 0) out.push_back({{root_index_.at(ai)}, Rat(c)});
      return;
    }
    const RootVector& beta = roots_[id];
    RootVector neg_ai = ai;
    for (auto& x : neg_ai) x = -x;
    if (beta == neg_ai) {
      // [E_{s a_i}, E_{-s a_i}] = -h_{s a_i} = -s h_i
      out.push_back({{2 * np_ + (i - 1)}, Rat(g * -s)});
      return;
    }
    RootVector sum = beta;
    sum[i - 1] += s;
    auto it = root_index_.find(sum);
    if (it == root_index_.end()) return;
    int sign = eps_parity(ai, beta) ? -1 : 1;
    out.push_back({{it->second}, Rat(g * sign)});
  }

  void apply_e(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply_ad(i, +1, b, out);
  }
  void apply_f(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply_ad(i, -1, b, out);
  }

  std::vector<BasisLabel> weight_slice(const Weight& w) const override {
    bool zero = true;
    for (int x : w) zero &= x == 0;
    std::vector<BasisLabel> out;
    if (zero) {
      for (int j = 0; j < t_.rank; ++j) out.push_back({2 * np_ + j});
      return out;
    }
    // invert: w = Cartan * beta
    // small exact solve over rationals
    int n = t_.rank;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m[r][c] = t_.cartan[r][c];
      m[r][n] = w[r];
    }
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (m[r][c] != 0) { piv = r; break; }
      if (piv < 0) return {};
      std::swap(m[c], m[piv]);
      for (int r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rat f = m[r][c] / m[c][c];
        for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
      }
    }
    RootVector beta(n);
    for (int r = 0; r < n; ++r) {
      Rat x = m[r][n] / m[r][r];
      if (x.get_den() != 1) return {};
      beta[r] = static_cast<int>(x.get_num().get_si());
    }
    auto it = root_index_.find(beta);
    if (it == root_index_.end()) return {};
    return {{it->second}};
  }

  int max_string_length() const override { return 2; }
  std::string describe() const override { return "adjoint of " + t_.name(); }

  int num_positive() const { return np_; }
  const RootVector& root_of(int id) const { return roots_[id]; }

 private:
  CartanType t_;
  int np_ = 0;
  std::vector<RootVector> roots_;
  std::map<RootVector, int> root_index_;
};

// ---------------------------------------------------------------------------
// Composite realizations over a base module with single-int labels.

class CompositeModule : public Module {
 public:
  CompositeModule(ModuleHandle sub, int slots) : sub_(std::move(sub)), slots_(slots) {
    int n = base_dim(*sub_);
    sub_weights_.reserve(n);
    for (int i = 0; i < n; ++i) sub_weights_.push_back(sub_->weight({i}));
  }

  static int base_dim(const Module& m) {
    if (m.realization() == Realization::Minuscule)
      return static_cast<const MinusculeModule&>(m).dim();
    if (m.realization() == Realization::Adjoint)
      return static_cast<const AdjointModule&>(m).dim();
    throw std::invalid_argument("nested composite realizations are not supported");
  }

  const CartanType& type() const override { return sub_->type(); }

  Weight weight(const BasisLabel& b) const override {
    Weight w(type().rank, 0);
    for (int id : b) w = add_w(w, sub_weights_[id]);
    return w;
  }

 protected:
  ModuleHandle sub_;
  int slots_;
  std::vector<Weight> sub_weights_;

  void apply_slotwise(bool raise, int i, const BasisLabel& b, bool alternating, bool distinct,
                      std::vector<std::pair<BasisLabel, Rat>>& out) const {
    std::vector<std::pair<BasisLabel, Rat>> sub_out;
    for (int s = 0; s < slots_; ++s) {
      sub_out.clear();
      if (raise)
        sub_->apply_e(i, {b[s]}, sub_out);
      else
        sub_->apply_f(i, {b[s]}, sub_out);
      for (const auto& [lbl, c] : sub_out) {
        BasisLabel nb = b;
        nb[s] = lbl[0];
        Rat coeff = c;
        if (distinct) {
          // resort ascending, tracking transpositions; equal entries vanish
          bool dup = false;
          int swaps = 0;
          for (int u = s; u > 0 && nb[u] < nb[u - 1]; --u) {
            std::swap(nb[u], nb[u - 1]);
            ++swaps;
          }
          for (int u = s; u + 1 < slots_ && nb[u] > nb[u + 1]; ++u) {
            std::swap(nb[u], nb[u + 1]);
            ++swaps;
          }
          for (int u = 0; u + 1 < slots_; ++u) dup |= nb[u] == nb[u + 1];
          if (dup) continue;
          if (alternating && (swaps & 1)) coeff = -coeff;
        } else {
          std::sort(nb.begin(), nb.end());
        }
        out.push_back({nb, coeff});
      }
    }
  }

  // Enumerate sorted tuples with the given weight sum.
  std::vector<BasisLabel> slice_tuples(const Weight& w, bool strict) const {
    std::vector<BasisLabel> out;
    int n = static_cast<int>(sub_weights_.size());
    BasisLabel cur(slots_);
    Weight acc(type().rank, 0);
    std::function<void(int, int)> rec = [&](int slot, int from) {
      if (slot == slots_) {
        Weight target = w;
        if (acc == target) out.push_back(cur);
        return;
      }
      int remaining = slots_ - slot;
      for (int id = from; id <= n - (strict ? remaining : 1); ++id) {
        cur[slot] = id;
        for (int r = 0; r < type().rank; ++r) acc[r] += sub_weights_[id][r];
        rec(slot + 1, strict ? id + 1 : id);
        for (int r = 0; r < type().rank; ++r) acc[r] -= sub_weights_[id][r];
      }
    };
    rec(0, 0);
    return out;
  }
};

class ExteriorModule final : public CompositeModule {
 public:
  ExteriorModule(int p, ModuleHandle sub) : CompositeModule(std::move(sub), p) {}
  Realization realization() const override { return Realization::Exterior; }
  void apply_e(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply_slotwise(true, i, b, true, true, out);
  }
  void apply_f(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply_slotwise(false, i, b, true, true, out);
  }
  std::vector<BasisLabel> weight_slice(const Weight& w) const override {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(w);
    if (it == cache_.end()) it = cache_.emplace(w, slice_tuples(w, true)).first;
    return it->second;
  }
  int max_string_length() const override { return slots_ * sub_->max_string_length(); }
  std::string describe() const override {
    return "Ext^" + std::to_string(slots_) + "(" + sub_->describe() + ")";
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<Weight, std::vector<BasisLabel>> cache_;
};

class SymmetricModule final : public CompositeModule {
 public:
  SymmetricModule(int p, ModuleHandle sub) : CompositeModule(std::move(sub), p) {}
  Realization realization() const override { return Realization::Symmetric; }
  void apply_e(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply_slotwise(true, i, b, false, false, out);
  }
  void apply_f(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply_slotwise(false, i, b, false, false, out);
  }
  std::vector<BasisLabel> weight_slice(const Weight& w) const override {
    return slice_tuples(w, false);
  }
  int max_string_length() const override { return slots_ * sub_->max_string_length(); }
  std::string describe() const override {
    return "Sym^" + std::to_string(slots_) + "(" + sub_->describe() + ")";
  }
};

class TensorModule final : public Module {
 public:
  TensorModule(ModuleHandle a, ModuleHandle b) : a_(std::move(a)), b_(std::move(b)) {}
  Realization realization() const override { return Realization::Tensor; }
  const CartanType& type() const override { return a_->type(); }

  Weight weight(const BasisLabel& b) const override {
    BasisLabel la(b.begin(), b.begin() + 1);
    BasisLabel lb(b.begin() + 1, b.end());
    return add_w(a_->weight(la), b_->weight(lb));
  }

  void apply(bool raise, int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const {
    BasisLabel la(b.begin(), b.begin() + 1);
    BasisLabel lb(b.begin() + 1, b.end());
    std::vector<std::pair<BasisLabel, Rat>> tmp;
    if (raise) a_->apply_e(i, la, tmp); else a_->apply_f(i, la, tmp);
    for (const auto& [l, c] : tmp) {
      BasisLabel nb = b;
      nb[0] = l[0];
      out.push_back({nb, c});
    }
    tmp.clear();
    if (raise) b_->apply_e(i, lb, tmp); else b_->apply_f(i, lb, tmp);
    for (const auto& [l, c] : tmp) {
      BasisLabel nb = b;
      std::copy(l.begin(), l.end(), nb.begin() + 1);
      out.push_back({nb, c});
    }
  }
  void apply_e(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply(true, i, b, out);
  }
  void apply_f(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const override {
    apply(false, i, b, out);
  }

  std::vector<BasisLabel> weight_slice(const Weight& w) const override {
    std::vector<BasisLabel> out;
    int na = CompositeModule::base_dim(*a_);
    for (int i = 0; i < na; ++i) {
      Weight rest = sub_w(w, a_->weight({i}));
      for (const auto& lb : b_->weight_slice(rest)) {
        BasisLabel nb;
        nb.push_back(i);
        nb.insert(nb.end(), lb.begin(), lb.end());
        out.push_back(nb);
      }
    }
    return out;
  }

  int max_string_length() const override {
    return a_->max_string_length() + b_->max_string_length();
  }
  std::string describe() const override {
    return a_->describe() + " (x) " + b_->describe();
  }

 private:
  ModuleHandle a_, b_;
};

}  // namespace

ModuleHandle minuscule_module(const CartanType& t, int k) {
  return std::make_shared<MinusculeModule>(t, k);
}
ModuleHandle adjoint_module(const CartanType& t) { return std::make_shared<AdjointModule>(t); }
ModuleHandle exterior_module(int p, ModuleHandle m) {
  return std::make_shared<ExteriorModule>(p, std::move(m));
}
ModuleHandle tensor_module(ModuleHandle a, ModuleHandle b) {
  return std::make_shared<TensorModule>(std::move(a), std::move(b));
}
ModuleHandle symmetric_module(int p, ModuleHandle m) {
  return std::make_shared<SymmetricModule>(p, std::move(m));
}

bool is_zero(const SparseVec& v) { return v.empty(); }

SparseVec scale(const SparseVec& v, const Rat& c) {
  SparseVec out;
  if (c == 0) return out;
  for (const auto& [l, x] : v) out[l] = x * c;
  return out;
}

namespace {

SparseVec apply_once(const Module& m, ChevDir dir, int i, const SparseVec& v) {
  SparseVec out;
  std::vector<std::pair<BasisLabel, Rat>> tmp;
  for (const auto& [l, c] : v) {
    tmp.clear();
    if (dir == ChevDir::Raise)
      m.apply_e(i, l, tmp);
    else
      m.apply_f(i, l, tmp);
    for (const auto& [nl, nc] : tmp) {
      Rat& slot = out[nl];
      slot += c * nc;
      if (slot == 0) out.erase(nl);
    }
  }
  return out;
}

}  // namespace

SparseVec apply_chevalley(const Module& m, ChevDir dir, int i, int power, const SparseVec& v) {
  SparseVec cur = v;
  mpz_class fact = 1;
  for (int s = 1; s <= power; ++s) {
    cur = apply_once(m, dir, i, cur);
    fact *= s;
    if (cur.empty()) return cur;
  }
  return scale(cur, Rat(1, fact));
}

Weight weight_of(const Module& m, const SparseVec& v) {
  if (v.empty()) throw std::invalid_argument("weight of zero vector");
  Weight w = m.weight(v.begin()->first);
  for (const auto& [l, c] : v)
    if (m.weight(l) != w) throw std::runtime_error("vector is not homogeneous");
  return w;
}

std::string vec_to_string(const Module& m, const SparseVec& v) {
  (void)m;
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")*[";
    for (size_t i = 0; i < l.size(); ++i) {
      if (i) os << ",";
      os << l[i];
    }
    os << "]";
  }
  return os.str();
}

SparseVec highest_weight_vector(const Module& m, const Weight& lambda) {
  const CartanType& t = m.type();
  std::vector<BasisLabel> slice = m.weight_slice(lambda);
  int n = static_cast<int>(slice.size());
  if (n == 0) throw std::runtime_error("weight does not occur in module");
  std::map<BasisLabel, int> pos;
  for (int j = 0; j < n; ++j) pos[slice[j]] = j;

  // rows: image coordinates of e_i applied to each slice vector
  std::vector<std::vector<Rat>> rows;
  std::vector<std::pair<BasisLabel, Rat>> tmp;
  for (int i = 1; i <= t.rank; ++i) {
    std::map<BasisLabel, std::vector<Rat>> img;  // image label -> coefficients per column
    for (int j = 0; j < n; ++j) {
      tmp.clear();
      m.apply_e(i, slice[j], tmp);
      for (const auto& [l, c] : tmp) {
        auto& row = img[l];
        row.resize(n);
        row[j] += c;
      }
    }
    for (auto& [l, row] : img) {
      row.resize(n);
      rows.push_back(row);
    }
  }

  // nullspace of the stacked matrix
  int nr = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < nr; ++c) {
    int piv = -1;
    for (int rr = r; rr < nr; ++rr)
      if (rows[rr][c] != 0) { piv = rr; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (int rr = 0; rr < nr; ++rr) {
      if (rr == r || rows[rr][c] == 0) continue;
      Rat f = rows[rr][c] / rows[r][c];
      for (int cc = c; cc < n; ++cc) rows[rr][cc] -= f * rows[r][cc];
    }
    pivot_col.push_back(c);
    ++r;
  }
  int nullity = n - r;
  if (nullity != 1)
    throw std::runtime_error("highest weight multiplicity is " + std::to_string(nullity) +
                             ", expected 1 in " + m.describe());
  // free column = the one not in pivot_col
  std::vector<bool> is_piv(n, false);
  for (int c : pivot_col) is_piv[c] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) { free_col = c; break; }
  std::vector<Rat> sol(n, 0);
  sol[free_col] = 1;
  for (int rr = r - 1; rr >= 0; --rr) {
    int c = pivot_col[rr];
    Rat s = rows[rr][free_col] * sol[free_col];
    sol[c] = -s / rows[rr][c];
  }
  SparseVec v;
  for (int j = 0; j < n; ++j)
    if (sol[j] != 0) v[slice[j]] = sol[j];
  // normalize: lexicographically-least support label gets +1
  Rat lead = v.begin()->second;
  return scale(v, 1 / lead);
}

SparseVec extreme_vector(const Module& m, const SparseVec& v_plus, const WeylWord& word) {
  SparseVec cur = v_plus;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    Weight w = weight_of(m, cur);
    int c = w[i - 1];
    if (c < 0) throw std::runtime_error("word not adapted to extreme orbit walk");
    if (c == 0) continue;
    cur = apply_chevalley(m, ChevDir::Lower, i, c, cur);
    if (cur.empty()) throw std::runtime_error("extreme walk hit zero");
  }
  return cur;
}

ModuleHandle recommended_realization(const CartanType& t, int i) {
  static std::map<std::pair<std::string, int>, ModuleHandle> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t.name(), i);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  ModuleHandle h;
  if (t.series == 'E' && t.rank == 6) {
    switch (i) {
      case 1: h = minuscule_module(t, 1); break;
      case 6: h = minuscule_module(t, 6); break;
      case 2: h = adjoint_module(t); break;
      case 3: h = exterior_module(2, minuscule_module(t, 1)); break;
      case 5: h = exterior_module(2, minuscule_module(t, 6)); break;
      case 4: h = exterior_module(3, minuscule_module(t, 1)); break;
      default: throw std::out_of_range("fundamental index");
    }
  } else if (t.series == 'E' && t.rank == 7) {
    switch (i) {
      case 7: h = minuscule_module(t, 7); break;
      case 1: h = adjoint_module(t); break;
      case 6: h = exterior_module(2, minuscule_module(t, 7)); break;
      case 5: h = exterior_module(3, minuscule_module(t, 7)); break;
      case 4: h = exterior_module(4, minuscule_module(t, 7)); break;
      case 3: h = exterior_module(2, adjoint_module(t)); break;
      case 2: h = tensor_module(minuscule_module(t, 7), adjoint_module(t)); break;
      default: throw std::out_of_range("fundamental index");
    }
  } else if (t.series == 'A') {
    // every fundamental rep of A_n is minuscule
    h = minuscule_module(t, i);
  } else if (t.series == 'D') {
    if (i == 1 || i == t.rank - 1 || i == t.rank)
      h = minuscule_module(t, i);
    else if (i == 2)
      h = adjoint_module(t);
    else
      h = exterior_module(i, minuscule_module(t, 1));
  } else {
    throw std::invalid_argument("unsupported type");
  }
  cache[key] = h;
  return h;
}

// ---------------------------------------------------------------------------
// Algorithm 1: depth-first torus expansion of generalized minors with the
// word scan interleaved into the path search.

namespace {

struct QPoly {
  std::map<ExpVec, Rat, DegLexLess> terms;
  void add(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) terms.emplace(e, c);
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

struct NormVec {
  SparseVec vec;  // primitive integer coefficients, first support coeff > 0
  Rat scale;      // original = scale * vec
};

NormVec normalize(const SparseVec& v) {
  NormVec out;
  if (v.empty()) {
    out.scale = 0;
    return out;
  }
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [l, c] : v) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  for (const auto& [l, c] : v) {
    mpz_class n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rat factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (v.begin()->second < 0) factor = -factor;
  out.scale = factor;
  out.vec = scale(v, 1 / factor);
  return out;
}

struct MinorSearch {
  const Module* mod;
  CartanType t;
  std::vector<int> letters;       // scan order
  ChevDir dir;
  SparseVec target_norm;          // normalized target extreme vector
  Rat target_scale;
  std::vector<std::vector<int>> suffix_count;  // [pos][letter-1] occurrences at >= pos
  int cap;
  bool tracing = false;
  std::set<std::string> sequences;
  std::map<std::pair<int, SparseVec>, QPoly> memo;
  // positions in the torus word (1-based variable index) per scan step
  std::vector<int> var_of_step;
  int nvars;

  // deficit bookkeeping in root coordinates
  std::vector<int> root_deficit(const SparseVec& v) const {
    Weight mu = weight_of(*mod, v);
    Weight tw = weight_of(*mod, target_norm);
    Weight diff = dir == ChevDir::Raise ? sub_w(tw, mu) : sub_w(mu, tw);
    // solve Cartan * x = diff
    int n = t.rank;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m[r][c] = t.cartan[r][c];
      m[r][n] = diff[r];
    }
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (m[r][c] != 0) { piv = r; break; }
      std::swap(m[c], m[piv]);
      for (int r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rat f = m[r][c] / m[c][c];
        for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
      }
    }
    std::vector<int> out(n);
    for (int r = 0; r < n; ++r) {
      Rat x = m[r][n] / m[r][r];
      if (x.get_den() != 1) throw std::runtime_error("deficit not in root lattice");
      out[r] = static_cast<int>(x.get_num().get_si());
    }
    return out;
  }

  bool feasible(int pos, const std::vector<int>& deficit) const {
    for (int s = 0; s < t.rank; ++s) {
      if (deficit[s] < 0) return false;
      if (deficit[s] > cap * suffix_count[pos][s]) return false;
    }
    return true;
  }

  QPoly rec(int pos, const SparseVec& vnorm, const std::vector<int>& deficit,
            std::vector<std::pair<int, int>>* seq) {
    int total = static_cast<int>(letters.size());
    if (pos == total) {
      QPoly out;
      bool zerodef = true;
      for (int x : deficit) zerodef &= x == 0;
      if (zerodef && vnorm == target_norm) {
        out.add(ExpVec(nvars, 0), 1 / target_scale);
        if (tracing && seq) {
          auto sorted = *seq;
          std::sort(sorted.begin(), sorted.end());
          std::string s;
          for (const auto& [var, m] : sorted)
            for (int r = 0; r < m; ++r) s += std::to_string(letters_by_var.at(var));
          sequences.insert(s);
        }
      }
      return out;
    }
    if (!feasible(pos, deficit)) return {};
    if (!tracing) {
      auto it = memo.find({pos, vnorm});
      if (it != memo.end()) return it->second;
    }
    QPoly out = rec(pos + 1, vnorm, deficit, seq);
    int letter = letters[pos];
    SparseVec cur = vnorm;
    mpz_class fact = 1;
    for (int m = 1; m <= cap; ++m) {
      cur = apply_once_op(letter, cur);
      if (cur.empty()) break;
      fact *= m;
      std::vector<int> d2 = deficit;
      d2[letter - 1] -= m;
      if (d2[letter - 1] < 0) break;
      NormVec nv = normalize(scale(cur, Rat(1, fact)));
      if (tracing && seq) seq->push_back({var_of_step[pos], m});
      QPoly sub = rec(pos + 1, nv.vec, d2, seq);
      if (tracing && seq) seq->pop_back();
      for (const auto& [e, c] : sub.terms) {
        ExpVec e2 = e;
        e2[var_of_step[pos] - 1] += static_cast<uint8_t>(m);
        out.add(e2, c * nv.scale);
      }
    }
    if (!tracing) memo.emplace(std::make_pair(pos, vnorm), out);
    return out;
  }

  SparseVec apply_once_op(int letter, const SparseVec& v) const {
    SparseVec out;
    std::vector<std::pair<BasisLabel, Rat>> tmp;
    for (const auto& [l, c] : v) {
      tmp.clear();
      if (dir == ChevDir::Raise)
        mod->apply_e(letter, l, tmp);
      else
        mod->apply_f(letter, l, tmp);
      for (const auto& [nl, nc] : tmp) {
        Rat& slot = out[nl];
        slot += c * nc;
        if (slot == 0) out.erase(nl);
      }
    }
    return out;
  }

  std::map<int, int> letters_by_var;  // variable index -> simple letter
};

}  // namespace

TorusPoly expand_minor(const CartanType& t, int k, int i, const WeylWord& w,
                       bool transposed, MinorTrace* trace) {
  FixedWords fw = fixed_words(t, k);
  if (transposed) {
    // Delta^T_{w(varpi_i), w0(varpi_i)}(u_-) = Delta_{varpi_s, w w0(varpi_s)}(u_-^T)
    // for s = sigma(i), which is the plain minor below at the element w w0.
    WeylElt ww0 = compose(word_to_elt(t, w), word_to_elt(t, fw.w0));
    return expand_minor(t, k, dual_index(t, i), reduced_word(t, ww0), false, trace);
  }
  const WeylWord& wp = fw.wP;
  int l = static_cast<int>(wp.size());
  ModuleHandle mod = recommended_realization(t, i);

  SparseVec vplus = highest_weight_vector(*mod, t.fundamental(i));
  SparseVec vstart = extreme_vector(*mod, vplus, w);

  MinorSearch ms;
  ms.mod = mod.get();
  ms.t = t;
  ms.nvars = l;
  ms.cap = mod->max_string_length();
  ms.tracing = trace != nullptr;

  SparseVec target;
  {
    // u_+ = x_{r_1}(a_1)...x_{r_l}(a_l): rightmost acts first -> scan a_l..a_1 raising
    ms.dir = ChevDir::Raise;
    target = vplus;
    for (int j = l; j >= 1; --j) {
      ms.letters.push_back(wp[j - 1]);
      ms.var_of_step.push_back(j);
    }
  }
  for (size_t s = 0; s < ms.letters.size(); ++s) ms.letters_by_var[ms.var_of_step[s]] = ms.letters[s];

  NormVec tn = normalize(target);
  ms.target_norm = tn.vec;
  ms.target_scale = tn.scale;

  int total = static_cast<int>(ms.letters.size());
  ms.suffix_count.assign(total + 1, std::vector<int>(t.rank, 0));
  for (int pos = total - 1; pos >= 0; --pos) {
    ms.suffix_count[pos] = ms.suffix_count[pos + 1];
    ms.suffix_count[pos][ms.letters[pos] - 1]++;
  }

  NormVec sv = normalize(vstart);
  std::vector<int> deficit = ms.root_deficit(sv.vec);
  std::vector<std::pair<int, int>> seq;
  QPoly q = ms.rec(0, sv.vec, deficit, ms.tracing ? &seq : nullptr);

  TorusPoly out = TorusPoly::zero(l);
  for (const auto& [e, c] : q.terms) {
    Rat v = c * sv.scale;
    if (v.get_den() != 1) throw std::runtime_error("non-integral minor expansion");
    out.add_term(e, mpz_class(v.get_num()));
  }
  if (trace) {
    trace->sequences = static_cast<long>(ms.sequences.size());
    trace->sequence_strings.assign(ms.sequences.begin(), ms.sequences.end());
  }
  return out;
}

TorusPoly expand_minor_wpinv(const CartanType& t, int k, int i) {
  const WeylWord& wp = fixed_words(t, k).wP;
  WeylWord wpinv(wp.rbegin(), wp.rend());
  return expand_minor(t, k, i, wpinv, false);
}

}  // namespace cominus
