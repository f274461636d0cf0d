#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cominus/minuscule.hpp"

using namespace cominus;

namespace {

int edge_letter(const WeightDiagram& d, const std::string& below, const std::string& above) {
  int b = d.vertex_by_label(below), a = d.vertex_by_label(above);
  for (const auto& e : d.edges)
    if (e.src == a && e.dst == b) return e.letter;
  return -1;
}

int degree_to_sink(const WeightDiagram& d, int v) {
  if (v == d.sink) return 0;
  for (int i = 1; i <= d.type.rank; ++i)
    if (d.down[v][i - 1] >= 0) return 1 + degree_to_sink(d, d.down[v][i - 1]);
  return -1;
}

void check_structure(const WeightDiagram& d) {
  // weights pairwise distinct
  std::set<Weight> ws(d.weights.begin(), d.weights.end());
  CHECK(ws.size() == d.weights.size());
  // edge consistency: weight(dst) = weight(src) - alpha_i
  for (const auto& e : d.edges) {
    Weight expect = d.weights[e.src];
    for (int r = 0; r < d.type.rank; ++r) expect[r] -= d.type.cartan[r][e.letter - 1];
    CHECK(expect == d.weights[e.dst]);
  }
  // label degree = distance to sink
  for (int v = 0; v < d.num_vertices(); ++v) CHECK(d.labels[v].degree == degree_to_sink(d, v));
  CHECK(d.labels[d.sink] == PluckerLabel{0, 0});
}

}  // namespace

TEST_CASE("E6 diagram") {
  CartanType e6 = CartanType::parse("E6");
  const WeightDiagram& d = build_diagram(e6, 1);
  CHECK(d.num_vertices() == 27);
  check_structure(d);
  // top chain descending from p16: edges 1, 3, 4
  CHECK(edge_letter(d, "p15", "p16") == 1);
  CHECK(edge_letter(d, "p14", "p15") == 3);
  CHECK(edge_letter(d, "p13", "p14") == 4);
  CHECK(edge_letter(d, "p0", "p1") == 6);
  CHECK(d.labels[d.source] == PluckerLabel{16, 0});

  const WeightDiagram& d6 = build_diagram(e6, 6);
  CHECK(d6.num_vertices() == 27);
  check_structure(d6);
  // sigma-twisted labels: bottom edge is 1 on the k=6 poset
  CHECK(edge_letter(d6, "p0", "p1") == 1);
  CHECK(edge_letter(d6, "p15", "p16") == 6);

  // the Plucker diagram of the Cayley plane is the k=1 poset
  CHECK(&plucker_diagram(e6, 6) == &d);
}

TEST_CASE("E7 diagram and cube") {
  CartanType e7 = CartanType::parse("E7");
  const WeightDiagram& d = build_diagram(e7, 7);
  CHECK(d.num_vertices() == 56);
  check_structure(d);
  CHECK(d.labels[d.source] == PluckerLabel{27, 0});
  CHECK(d.labels[d.source].degree == degree_to_sink(d, d.source));

  // the commutative cube between p12' and p15'
  CHECK(edge_letter(d, "p12'", "p13") == 7);
  CHECK(edge_letter(d, "p12'", "p13'") == 5);
  CHECK(edge_letter(d, "p12'", "p13''") == 2);
  CHECK(edge_letter(d, "p13", "p14''") == 5);
  CHECK(edge_letter(d, "p13", "p14'") == 2);
  CHECK(edge_letter(d, "p13'", "p14''") == 7);
  CHECK(edge_letter(d, "p13'", "p14") == 2);
  CHECK(edge_letter(d, "p13''", "p14'") == 7);
  CHECK(edge_letter(d, "p13''", "p14") == 5);
  CHECK(edge_letter(d, "p14''", "p15'") == 2);
  CHECK(edge_letter(d, "p14'", "p15'") == 5);
  CHECK(edge_letter(d, "p14", "p15'") == 7);
}

TEST_CASE("at most one edge per letter per vertex") {
  for (auto [name, k] : std::vector<std::pair<const char*, int>>{{"E6", 1}, {"E7", 7}, {"A3", 2}, {"D5", 5}}) {
    const WeightDiagram& d = build_diagram(CartanType::parse(name), k);
    for (int v = 0; v < d.num_vertices(); ++v) {
      std::set<int> down_letters, up_letters;
      for (const auto& e : d.edges) {
        if (e.src == v) CHECK(down_letters.insert(e.letter).second);
        if (e.dst == v) CHECK(up_letters.insert(e.letter).second);
      }
    }
  }
}

TEST_CASE("Gr(2,4) diagram") {
  const WeightDiagram& d = build_diagram(CartanType::parse("A3"), 2);
  CHECK(d.num_vertices() == 6);
  check_structure(d);
}

TEST_CASE("paths to lowest") {
  CartanType e6 = CartanType::parse("E6");
  const WeightDiagram& d = plucker_diagram(e6, 6);

  auto paths = paths_to_lowest(d, d.vertex_by_label("p7'"));
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == WeylWord{6, 5, 4, 2, 3, 4, 5});
  CHECK(paths[1] == WeylWord{6, 5, 4, 3, 2, 4, 5});

  auto p0 = paths_to_lowest(d, d.sink);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  auto p1 = paths_to_lowest(d, d.vertex_by_label("p1"));
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == WeylWord{6});
}

TEST_CASE("diagram json") {
  const WeightDiagram& d = build_diagram(CartanType::parse("A3"), 2);
  std::string js = d.to_json();
  CHECK(js.find("\"vertices\"") != std::string::npos);
  CHECK(js.find("\"edges\"") != std::string::npos);
}

TEST_CASE("label round trip") {
  for (auto s : {"p0", "p11'", "p11''", "p5"}) CHECK(label_to_string(label_from_string(s)) == s);
}
