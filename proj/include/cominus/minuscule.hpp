#ifndef COMINUS_MINUSCULE_HPP
#define COMINUS_MINUSCULE_HPP

#include <string>
#include <vector>

#include "cominus/rootdata.hpp"

namespace cominus {

struct PluckerLabel {
  int degree = 0;
  int decoration = 0;  // 0 none, 1 prime, 2 double prime
  bool operator==(const PluckerLabel& o) const {
    return degree == o.degree && decoration == o.decoration;
  }
  bool operator<(const PluckerLabel& o) const {
    if (degree != o.degree) return degree < o.degree;
    return decoration < o.decoration;
  }
};

std::string label_to_string(const PluckerLabel& l);          // "p11''"
PluckerLabel label_from_string(const std::string& s);

// Weight poset of a minuscule representation V(varpi_m). Vertex ids are dense
// integers in BFS order from the highest weight (id 0 = source).
struct WeightDiagram {
  CartanType type;
  int rep_index = 0;  // m: the fundamental weight of the representation

  struct Edge {
    int src, dst, letter;  // f_letter . v_src = v_dst
  };

  std::vector<Weight> weights;        // by vertex id
  std::vector<PluckerLabel> labels;   // by vertex id
  std::vector<Edge> edges;
  std::vector<std::vector<int>> down;  // down[v][i-1] = target of f_i or -1
  std::vector<std::vector<int>> up;    // up[v][i-1]   = target of e_i or -1

  int source = 0;
  int sink = 0;

  int num_vertices() const { return static_cast<int>(weights.size()); }
  int vertex_by_label(const PluckerLabel& l) const;
  int vertex_by_label(const std::string& name) const;
  int vertex_by_weight(const Weight& w) const;
  std::string to_json() const;
};

// Weight poset of V(varpi_k), with the source-data label fixtures for the two
// exceptional diagrams and a deterministic (degree, least path-label-multiset)
// rule elsewhere.
const WeightDiagram& build_diagram(const CartanType& t, int k);

// The diagram carrying the Plucker coordinates of the space G/P_k, i.e. the
// poset of V(varpi_{sigma(k)}) whose lowest weight is -varpi_k.
const WeightDiagram& plucker_diagram(const CartanType& t, int k);

// All label sequences (b_1..b_d) with f_{b_1} ... f_{b_d} . v = v_sink, the
// last-applied letter written first. Exhaustive and duplicate-free.
std::vector<WeylWord> paths_to_lowest(const WeightDiagram& d, int v);

namespace fixtures {
struct DiagramFixture {
  std::vector<std::string> names;
  struct E { std::string below, above; int letter; };
  std::vector<E> edges;  // above --f--> below
};
const DiagramFixture* diagram_fixture(const CartanType& t);  // null if none
}  // namespace fixtures

}  // namespace cominus

#endif
