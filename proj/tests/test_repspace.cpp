#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cominus/plucker.hpp"
#include "cominus/repspace.hpp"

using namespace cominus;

TEST_CASE("adjoint structure constants are consistent") {
  for (auto name : {"A3", "D4", "E6", "E7"}) {
    CartanType t = CartanType::parse(name);
    ModuleHandle ad = adjoint_module(t);
    int np = static_cast<int>(positive_roots(t).size());
    int dim = 2 * np + t.rank;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      BasisLabel x = {static_cast<int>(rng() % dim)};
      SparseVec v{{x, Rat(1)}};
      int i = 1 + static_cast<int>(rng() % t.rank);
      int j = 1 + static_cast<int>(rng() % t.rank);
      // [e_i, f_j] action: 0 for i != j, h_i for i = j
      SparseVec ef = apply_chevalley(*ad, ChevDir::Raise, i, 1,
                                     apply_chevalley(*ad, ChevDir::Lower, j, 1, v));
      SparseVec fe = apply_chevalley(*ad, ChevDir::Lower, j, 1,
                                     apply_chevalley(*ad, ChevDir::Raise, i, 1, v));
      SparseVec diff = ef;
      for (const auto& [l, c] : fe) {
        diff[l] -= c;
        if (diff[l] == 0) diff.erase(l);
      }
      if (i != j) {
        CHECK(diff.empty());
      } else {
        SparseVec expect = scale(v, Rat(ad->weight(x)[i - 1]));
        CHECK(diff == expect);
      }
      // weight bookkeeping of lowering
      SparseVec low = apply_chevalley(*ad, ChevDir::Lower, i, 1, v);
      if (!low.empty()) {
        Weight expect_w = ad->weight(x);
        for (int r = 0; r < t.rank; ++r) expect_w[r] -= t.cartan[r][i - 1];
        CHECK(weight_of(*ad, low) == expect_w);
      }
    }
  }
}

TEST_CASE("serre vanishing on minuscule modules") {
  CartanType e6 = CartanType::parse("E6");
  ModuleHandle m = minuscule_module(e6, 1);
  for (int v = 0; v < 27; ++v)
    for (int i = 1; i <= 6; ++i) {
      SparseVec vec{{{v}, Rat(1)}};
      CHECK(apply_chevalley(*m, ChevDir::Raise, i, 2, vec).empty());
      CHECK(apply_chevalley(*m, ChevDir::Lower, i, 2, vec).empty());
    }
}

TEST_CASE("chevalley action examples") {
  CartanType e6 = CartanType::parse("E6");
  const WeightDiagram& d = plucker_diagram(e6, 6);
  ModuleHandle m = minuscule_module(e6, 1);
  SparseVec v1{{{d.vertex_by_label("p1")}, Rat(1)}};
  SparseVec v0 = apply_chevalley(*m, ChevDir::Lower, 6, 1, v1);
  REQUIRE(v0.size() == 1);
  CHECK(v0.begin()->first[0] == d.sink);
  CHECK(v0.begin()->second == 1);

  // e_i then f_i on a weight vector with c_i = -1 returns it
  int v = d.vertex_by_label("p1");
  SparseVec w{{{v}, Rat(1)}};
  for (int i = 1; i <= 6; ++i) {
    if (d.weights[v][i - 1] != -1) continue;
    SparseVec round = apply_chevalley(*m, ChevDir::Lower, i, 1,
                                      apply_chevalley(*m, ChevDir::Raise, i, 1, w));
    CHECK(round == w);
  }

  // E7 wedge: lowering v27 ^ v26 moves only the second factor; the move of
  // v27 collapses the wedge, so f_7 kills it and f_6 gives v27 ^ v25.
  CartanType e7 = CartanType::parse("E7");
  ModuleHandle ext = exterior_module(2, minuscule_module(e7, 7));
  const WeightDiagram& d7 = plucker_diagram(e7, 7);
  int id27 = d7.vertex_by_label("p27"), id26 = d7.vertex_by_label("p26");
  int id25 = d7.vertex_by_label("p25");
  BasisLabel top = {std::min(id27, id26), std::max(id27, id26)};
  SparseVec wedge{{top, Rat(1)}};
  CHECK(apply_chevalley(*ext, ChevDir::Lower, 7, 1, wedge).empty());
  SparseVec lowered = apply_chevalley(*ext, ChevDir::Lower, 6, 1, wedge);
  REQUIRE(lowered.size() == 1);
  BasisLabel expect = {std::min(id27, id25), std::max(id27, id25)};
  CHECK(lowered.begin()->first == expect);
  CHECK(lowered.begin()->second == 1);
}

TEST_CASE("highest weight vectors") {
  CartanType e7 = CartanType::parse("E7");

  // Lambda^2 V(w7) at w6: the top wedge
  ModuleHandle ext2 = exterior_module(2, minuscule_module(e7, 7));
  SparseVec hw6 = highest_weight_vector(*ext2, e7.fundamental(6));
  REQUIRE(hw6.size() == 1);
  const WeightDiagram& d7 = plucker_diagram(e7, 7);
  BasisLabel top = {d7.vertex_by_label("p27"), d7.vertex_by_label("p26")};
  std::sort(top.begin(), top.end());
  CHECK(hw6.begin()->first == top);
  CHECK(hw6.begin()->second == 1);
  // annihilated by all raising operators
  for (int i = 1; i <= 7; ++i)
    CHECK(apply_chevalley(*ext2, ChevDir::Raise, i, 1, hw6).empty());

  // adjoint highest weight = highest root = w1
  ModuleHandle ad = adjoint_module(e7);
  SparseVec hw1 = highest_weight_vector(*ad, e7.fundamental(1));
  REQUIRE(hw1.size() == 1);
  for (int i = 1; i <= 7; ++i)
    CHECK(apply_chevalley(*ad, ChevDir::Raise, i, 1, hw1).empty());

  // weight check: w27 ^ w26 ^ w25 ^ w24 sums to varpi_4
  Weight sum(e7.rank, 0);
  const char* names[4] = {"p27", "p26", "p25", "p24"};
  for (const char* n : names) {
    const Weight& w = d7.weights[d7.vertex_by_label(n)];
    for (int r = 0; r < 7; ++r) sum[r] += w[r];
  }
  CHECK(sum == e7.fundamental(4));

  // multiplicity-1 validation of the realization table entries used for E6
  CartanType e6 = CartanType::parse("E6");
  for (int i = 1; i <= 6; ++i) {
    ModuleHandle m = recommended_realization(e6, i);
    SparseVec hw = highest_weight_vector(*m, e6.fundamental(i));
    CHECK(!hw.empty());
    CHECK(hw.begin()->second == 1);
  }
}

TEST_CASE("highest weight multiplicity error reports dimension") {
  // Lambda^2 of V(w1) of A3 contains V(w2) twice? No -- use a case with
  // genuine failure: weight 0 slice of the adjoint of A3 has multiplicity 3
  // as a weight but the nullspace there is 0-dimensional (no invariants).
  CartanType a3 = CartanType::parse("A3");
  ModuleHandle ad = adjoint_module(a3);
  Weight zero(3, 0);
  CHECK_THROWS_WITH_AS(highest_weight_vector(*ad, zero),
                       doctest::Contains("multiplicity is 0"), std::runtime_error);
}

TEST_CASE("extreme vectors") {
  CartanType e6 = CartanType::parse("E6");

  // V(w6): wPinv . highest lands on the vertex the source data calls p8
  ModuleHandle m6 = minuscule_module(e6, 6);
  const WeightDiagram& d6 = build_diagram(e6, 6);
  SparseVec hw{{{d6.source}, Rat(1)}};
  const WeylWord& wp = fixed_words(e6, 6).wP;
  WeylWord wpinv(wp.rbegin(), wp.rend());
  SparseVec v8 = extreme_vector(*m6, hw, wpinv);
  REQUIRE(v8.size() == 1);
  CHECK(d6.labels[v8.begin()->first[0]] == label_from_string("p8"));
  CHECK(v8.begin()->second == 1);

  // empty word: unchanged
  CHECK(extreme_vector(*m6, hw, {}) == hw);

  // adjoint: extreme vector at wPinv(w2) is a single root line
  ModuleHandle ad = adjoint_module(e6);
  SparseVec hw2 = highest_weight_vector(*ad, e6.fundamental(2));
  SparseVec x = extreme_vector(*ad, hw2, wpinv);
  REQUIRE(x.size() == 1);
  CHECK(abs(x.begin()->second) == 1);
  CHECK(weight_of(*ad, x) == apply_word(e6, wpinv, e6.fundamental(2)));
}

TEST_CASE("E6 minors equal the q polynomials (Lemma 3.2)") {
  CartanType e6 = CartanType::parse("E6");
  const PluckerTables& tab = builtin_tables(e6);
  for (int i = 1; i <= 6; ++i) {
    TorusPoly minor = expand_minor_wpinv(e6, 6, i);
    TorusPoly expect = eval_on_torus(e6, 6, tab.poly(tab.minor_names[i - 1]));
    INFO("i = " << i << " vs " << tab.minor_names[i - 1]);
    CHECK(minor == expect);
  }
}

TEST_CASE("identity minor is constant 1") {
  CartanType e6 = CartanType::parse("E6");
  for (int i : {1, 2, 6}) {
    TorusPoly m = expand_minor(e6, 6, i, {}, false);
    CHECK(m == TorusPoly::constant(16, 1));
  }
}
