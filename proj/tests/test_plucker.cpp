#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cominus/plucker.hpp"

using namespace cominus;

namespace {

ExpVec mono(int n, std::initializer_list<int> occ) {
  ExpVec e(n, 0);
  for (int i : occ) e[i - 1]++;
  return e;
}

}  // namespace

TEST_CASE("E6 q-evaluations from the Lemma 3.2 display") {
  CartanType e6 = CartanType::parse("E6");
  const PluckerTables& tab = builtin_tables(e6);

  CHECK(eval_on_torus(e6, 6, tab.poly("q12")) ==
        TorusPoly::monomial(16, mono(16, {4, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 16})));
  CHECK(eval_on_torus(e6, 6, tab.poly("q16")) ==
        TorusPoly::monomial(16, mono(16, {5, 6, 7, 8, 9, 10, 11, 12, 13, 13, 14, 14, 15, 15, 16, 16})));
  CHECK(eval_on_torus(e6, 6, tab.poly("q20")) ==
        TorusPoly::monomial(16, mono(16, {2, 3, 4, 5, 6, 7, 8, 8, 9, 10, 11, 12, 12, 13, 14, 14, 15, 15, 16, 16})));
  CHECK(eval_on_torus(e6, 6, tab.poly("q24")) ==
        TorusPoly::monomial(16, mono(16, {3, 4, 5, 6, 7, 7, 8, 8, 9, 10, 11, 11, 12, 12, 13, 13, 14, 14, 15, 15, 15, 16, 16, 16})));
  CHECK(eval_on_torus(e6, 6, PluckerPoly()) == TorusPoly::zero(16));
}

TEST_CASE("E6 relations hold on the torus") {
  RelationReport rep = verify_relations(CartanType::parse("E6"), 6);
  CHECK(rep.items.size() == 10);
  for (const auto& item : rep.items) {
    INFO(item.name);
    CHECK(item.pass);
  }
  CHECK(rep.pass);
}

TEST_CASE("E7 relations hold on the torus") {
  RelationReport rep = verify_relations(CartanType::parse("E7"), 7);
  CHECK(rep.items.size() == 28);
  for (const auto& item : rep.items) {
    INFO(item.name);
    CHECK(item.pass);
  }
  CHECK(rep.pass);
}

TEST_CASE("GLS correspondence, E6") {
  auto m = gls_correspondence(CartanType::parse("E6"), 6);
  REQUIRE(m.size() == 16);
  const char* expected[17] = {nullptr, "p1",  "p2",   "p3",   "p4'",  "p4''", "p5'", "p6'",
                              "p7'",   "p5''", "p6''", "p7''", "p8'", "p8''", "p9''", "p10''", "p11''"};
  for (int i = 1; i <= 16; ++i) CHECK(label_to_string(m.at(i)) == expected[i]);
}

TEST_CASE("GLS correspondence, E7") {
  auto m = gls_correspondence(CartanType::parse("E7"), 7);
  REQUIRE(m.size() == 27);
  const char* expected[28] = {nullptr, "p1",  "p2",   "p3",   "p4",   "p5''", "p5'",  "p6'",
                              "p7'",   "p8'",  "p6''", "p7''", "p8''", "p9",   "p9'",  "p9''",
                              "p10''", "p11''","p12''","p10'", "p11'", "p12'", "p13'", "p13''",
                              "p14",   "p15",  "p16",  "p17"};
  for (int i = 1; i <= 27; ++i) CHECK(label_to_string(m.at(i)) == expected[i]);
}

TEST_CASE("quantum numerators match the quantum-term Plucker coordinates") {
  CartanType e6 = CartanType::parse("E6");
  CHECK(quantum_numerator(e6, 6) == eval_on_torus(e6, 6, builtin_tables(e6).poly("p5''")));

  CartanType e7 = CartanType::parse("E7");
  CHECK(quantum_numerator(e7, 7) == eval_on_torus(e7, 7, builtin_tables(e7).poly("p10")));

  // P^1: single (empty) subexpression, numerator 1
  CartanType a1 = CartanType::parse("A1");
  CHECK(quantum_numerator(a1, 1) == TorusPoly::constant(1, 1));
}

TEST_CASE("superpotential torus identities, E6") {
  PotentialReport rep = verify_superpotential(CartanType::parse("E6"), 6);
  REQUIRE(rep.terms.size() == 7);
  for (const auto& term : rep.terms) {
    INFO(term.num << "/" << term.den << " = " << term.value);
    CHECK(term.pass);
  }
  CHECK(rep.partition_ok);
  CHECK(rep.pass);
  CHECK(rep.terms[4].value == "1 * a13 + 1 * a4");
}

TEST_CASE("superpotential torus identities, E7") {
  PotentialReport rep = verify_superpotential(CartanType::parse("E7"), 7);
  REQUIRE(rep.terms.size() == 8);
  for (const auto& term : rep.terms) {
    INFO(term.num << "/" << term.den << " = " << term.value);
    CHECK(term.pass);
  }
  CHECK(rep.partition_ok);
  CHECK(rep.pass);
}

TEST_CASE("plucker poly io") {
  const PluckerTables& tab = builtin_tables(CartanType::parse("E6"));
  CHECK(tab.poly("q8").to_string() == "- p0*p8 + p1*p7'");
  CHECK(tab.poly("q8").to_json().find("\"coeff\"") != std::string::npos);
  PluckerPoly parsed = parse_plucker_poly("p0*p8 - p1*p7'", {});
  CHECK(parsed == tab.poly("q8") * PluckerPoly::constant(-1));
}
