#include "cominus/minuscule.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cominus {

std::string label_to_string(const PluckerLabel& l) {
  std::string s = "p" + std::to_string(l.degree);
  if (l.decoration == 1) s += "'";
  if (l.decoration == 2) s += "''";
  return s;
}

PluckerLabel label_from_string(const std::string& s) {
  if (s.empty() || s[0] != 'p') throw std::invalid_argument("bad label: " + s);
  size_t end = s.size();
  int dec = 0;
  if (end >= 2 && s.substr(end - 2) == "''") {
    dec = 2;
    end -= 2;
  } else if (s.back() == '\'') {
    dec = 1;
    end -= 1;
  }
  return PluckerLabel{std::stoi(s.substr(1, end - 1)), dec};
}

int WeightDiagram::vertex_by_label(const PluckerLabel& l) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (labels[v] == l) return v;
  throw std::invalid_argument("unknown label " + label_to_string(l));
}

int WeightDiagram::vertex_by_label(const std::string& name) const {
  return vertex_by_label(label_from_string(name));
}

int WeightDiagram::vertex_by_weight(const Weight& w) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (weights[v] == w) return v;
  return -1;
}

std::string WeightDiagram::to_json() const {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (int v = 0; v < num_vertices(); ++v) {
    if (v) os << ",";
    os << "{\"id\":" << v << ",\"label\":\"" << label_to_string(labels[v]) << "\",\"weight\":[";
    for (size_t i = 0; i < weights[v].size(); ++i) {
      if (i) os << ",";
      os << weights[v][i];
    }
    os << "]}";
  }
  os << "],\"edges\":[";
  for (size_t e = 0; e < edges.size(); ++e) {
    if (e) os << ",";
    os << "{\"src\":" << edges[e].src << ",\"dst\":" << edges[e].dst
       << ",\"i\":" << edges[e].letter << "}";
  }
  os << "]}";
  return os.str();
}

namespace {

std::vector<std::vector<int>> dynkin_automorphisms(const CartanType& t) {
  // as maps on 1..rank (index 0 unused)
  std::vector<int> id(t.rank + 1);
  for (int i = 0; i <= t.rank; ++i) id[i] = i;
  std::vector<std::vector<int>> out = {id};
  if (t.series == 'E' && t.rank == 6) {
    std::vector<int> f = id;
    f[1] = 6; f[6] = 1; f[3] = 5; f[5] = 3;
    out.push_back(f);
  } else if (t.series == 'A' && t.rank > 1) {
    std::vector<int> f = id;
    for (int i = 1; i <= t.rank; ++i) f[i] = t.rank + 1 - i;
    out.push_back(f);
  } else if (t.series == 'D') {
    std::vector<int> f = id;
    f[t.rank - 1] = t.rank; f[t.rank] = t.rank - 1;
    out.push_back(f);
  }
  return out;
}

void assign_fixture_labels(WeightDiagram& d, const fixtures::DiagramFixture& fx) {
  const CartanType& t = d.type;
  for (const auto& tau : dynkin_automorphisms(t)) {
    // Propagate weights through the fixture from its source.
    std::map<std::string, int> indeg;  // number of fixture edges pointing down INTO the name
    for (const auto& n : fx.names) indeg[n] = 0;
    for (const auto& e : fx.edges) indeg[e.below]++;
    std::string src;
    int degmax = -1;
    PluckerLabel top{-1, 0};
    for (const auto& n : fx.names) {
      PluckerLabel l = label_from_string(n);
      if (l.degree > degmax) { degmax = l.degree; top = l; src = n; }
    }
    std::map<std::string, Weight> wt;
    wt[src] = d.weights[d.source];
    bool ok = true;
    // repeatedly propagate until stable
    bool progress = true;
    while (progress && ok) {
      progress = false;
      for (const auto& e : fx.edges) {
        auto ia = wt.find(e.above);
        if (ia == wt.end()) continue;
        Weight child = ia->second;
        int letter = tau[e.letter];
        if (child[letter - 1] != 1) { ok = false; break; }
        for (int r = 0; r < t.rank; ++r) child[r] -= t.cartan[r][letter - 1];
        auto ib = wt.find(e.below);
        if (ib == wt.end()) {
          wt[e.below] = child;
          progress = true;
        } else if (ib->second != child) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || wt.size() != fx.names.size()) continue;
    // match to diagram vertices by weight
    std::vector<PluckerLabel> labels(d.num_vertices());
    for (const auto& [name, w] : wt) {
      int v = d.vertex_by_weight(w);
      if (v < 0) { ok = false; break; }
      labels[v] = label_from_string(name);
    }
    if (!ok) continue;
    d.labels = labels;
    return;
  }
  throw std::runtime_error("fixture labels do not match diagram " + t.name());
}

void assign_fallback_labels(WeightDiagram& d) {
  int n = d.num_vertices();
  // distance to sink
  std::vector<int> deg(n, -1);
  deg[d.sink] = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& e : d.edges) {
      if (deg[e.dst] >= 0 && deg[e.src] < 0) {
        deg[e.src] = deg[e.dst] + 1;
        progress = true;
      }
    }
  }
  // label multiset along any downward path (path independent for minuscule posets)
  std::vector<std::vector<int>> ms(n);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });
  for (int v : order) {
    if (v == d.sink) continue;
    for (int i = 1; i <= d.type.rank; ++i) {
      int c = d.down[v][i - 1];
      if (c >= 0) {
        ms[v] = ms[c];
        ms[v].push_back(i);
        std::sort(ms[v].begin(), ms[v].end());
        break;
      }
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[deg[v]].push_back(v);
  for (auto& [dd, vs] : classes) {
    std::sort(vs.begin(), vs.end(), [&](int a, int b) { return ms[a] < ms[b]; });
    if (vs.size() == 1) {
      d.labels[vs[0]] = {dd, 0};
    } else if (vs.size() == 2) {
      d.labels[vs[0]] = {dd, 1};
      d.labels[vs[1]] = {dd, 2};
    } else if (vs.size() == 3) {
      d.labels[vs[0]] = {dd, 0};
      d.labels[vs[1]] = {dd, 1};
      d.labels[vs[2]] = {dd, 2};
    } else {
      throw std::runtime_error("degree class too large for prime labeling");
    }
  }
}

WeightDiagram make_diagram(const CartanType& t, int k) {
  if (!is_minuscule(t, k))
    throw std::invalid_argument("varpi_" + std::to_string(k) + " is not minuscule for " + t.name());
  WeightDiagram d;
  d.type = t;
  d.rep_index = k;
  std::map<Weight, int> index;
  d.weights.push_back(t.fundamental(k));
  index[d.weights[0]] = 0;
  // BFS closure under lowering; edges exactly where c_i = +1
  for (size_t v = 0; v < d.weights.size(); ++v) {
    Weight mu = d.weights[v];
    for (int i = 1; i <= t.rank; ++i) {
      if (mu[i - 1] != 1) continue;
      Weight child = mu;
      for (int r = 0; r < t.rank; ++r) child[r] -= t.cartan[r][i - 1];
      auto it = index.find(child);
      int cid;
      if (it == index.end()) {
        cid = static_cast<int>(d.weights.size());
        d.weights.push_back(child);
        index[child] = cid;
      } else {
        cid = it->second;
      }
      d.edges.push_back({static_cast<int>(v), cid, i});
    }
  }
  int n = d.num_vertices();
  d.down.assign(n, std::vector<int>(t.rank, -1));
  d.up.assign(n, std::vector<int>(t.rank, -1));
  for (const auto& e : d.edges) {
    d.down[e.src][e.letter - 1] = e.dst;
    d.up[e.dst][e.letter - 1] = e.src;
  }
  d.source = 0;
  d.sink = -1;
  for (int v = 0; v < n; ++v) {
    bool has_down = false;
    for (int i = 0; i < t.rank; ++i) has_down |= d.down[v][i] >= 0;
    if (!has_down) {
      if (d.sink >= 0) throw std::runtime_error("diagram has two sinks");
      d.sink = v;
    }
  }
  d.labels.assign(n, PluckerLabel{});
  const auto* fx = fixtures::diagram_fixture(t);
  if (fx && static_cast<int>(fx->names.size()) == n)
    assign_fixture_labels(d, *fx);
  else
    assign_fallback_labels(d);
  return d;
}

}  // namespace

const WeightDiagram& build_diagram(const CartanType& t, int k) {
  static std::map<std::pair<std::string, int>, WeightDiagram> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t.name(), k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_diagram(t, k)).first;
  return it->second;
}

const WeightDiagram& plucker_diagram(const CartanType& t, int k) {
  return build_diagram(t, dual_index(t, k));
}

std::vector<WeylWord> paths_to_lowest(const WeightDiagram& d, int v) {
  std::vector<WeylWord> out;
  WeylWord path;  // traversal order (first step first)
  std::function<void(int)> dfs = [&](int cur) {
    if (cur == d.sink) {
      out.emplace_back(path.rbegin(), path.rend());
      return;
    }
    for (int i = 1; i <= d.type.rank; ++i) {
      int nxt = d.down[cur][i - 1];
      if (nxt < 0) continue;
      path.push_back(i);
      dfs(nxt);
      path.pop_back();
    }
  };
  dfs(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cominus
