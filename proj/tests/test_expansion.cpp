#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cominus/expansion.hpp"

using namespace cominus;

namespace {

ExpVec ev(int n, std::initializer_list<int> ones) {
  ExpVec e(n, 0);
  for (int i : ones) e[i - 1]++;
  return e;
}

// Independent oracle: dense symbolic matrices over TorusPoly for type A.
// u_+^T = y_{r_l}(a_l) ... y_{r_1}(a_1) with y_i(a) = I + a E_{i+1,i}.
std::vector<std::vector<TorusPoly>> type_a_torus_matrix(const CartanType& t, int k) {
  const WeylWord& wp = fixed_words(t, k).wP;
  int l = static_cast<int>(wp.size());
  int n = t.rank + 1;
  auto ident = [&] {
    std::vector<std::vector<TorusPoly>> m(n, std::vector<TorusPoly>(n, TorusPoly::zero(l)));
    for (int i = 0; i < n; ++i) m[i][i] = TorusPoly::constant(l, 1);
    return m;
  };
  auto mul = [&](const auto& a, const auto& b) {
    auto c = ident();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        TorusPoly s = TorusPoly::zero(l);
        for (int q = 0; q < n; ++q) s += a[i][q] * b[q][j];
        c[i][j] = s;
      }
    return c;
  };
  auto m = ident();
  for (int j = 1; j <= l; ++j) {  // rightmost factor first: y_{r_1}(a_1)
    auto y = ident();
    int r = wp[j - 1];
    ExpVec e(l, 0);
    e[j - 1] = 1;
    y[r][r - 1] = TorusPoly::monomial(l, e);
    m = mul(y, m);
  }
  return m;
}

TorusPoly poly_det(std::vector<std::vector<TorusPoly>> m, int nvars) {
  int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  TorusPoly out = TorusPoly::zero(nvars);
  // Laplace along the first row
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<TorusPoly>> sub;
    for (int r = 1; r < n; ++r) {
      std::vector<TorusPoly> row;
      for (int c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(row);
    }
    TorusPoly term = m[0][j] * poly_det(sub, nvars);
    if (j % 2)
      out -= term;
    else
      out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("E6 plucker expansions from the Lemma 3.2 computation") {
  CartanType e6 = CartanType::parse("E6");

  TorusPoly p0 = expand_plucker(e6, 6, "p0");
  CHECK(p0 == TorusPoly::constant(16, 1));

  TorusPoly p16 = expand_plucker(e6, 6, "p16");
  CHECK(p16.num_terms() == 1);
  CHECK(p16 == TorusPoly::monomial(16, ev(16, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16})));

  TorusPoly p1 = expand_plucker(e6, 6, "p1");
  TorusPoly p1_expect = TorusPoly::monomial(16, ev(16, {9})) + TorusPoly::monomial(16, ev(16, {16}));
  CHECK(p1 == p1_expect);

  TorusPoly p7p = expand_plucker(e6, 6, "p7'");
  TorusPoly expect = TorusPoly::monomial(16, ev(16, {10, 11, 12, 13, 14, 15, 16})) +
                     TorusPoly::monomial(16, ev(16, {5, 11, 12, 13, 14, 15, 16})) +
                     TorusPoly::monomial(16, ev(16, {5, 6, 12, 13, 14, 15, 16})) +
                     TorusPoly::monomial(16, ev(16, {5, 6, 7, 13, 14, 15, 16}));
  CHECK(p7p == expect);

  TorusPoly p8 = expand_plucker(e6, 6, "p8");
  CHECK(p8 == TorusPoly::monomial(16, ev(16, {9, 10, 11, 12, 13, 14, 15, 16})));
}

TEST_CASE("expansion invariants") {
  CartanType e6 = CartanType::parse("E6");
  const WeightDiagram& d = plucker_diagram(e6, 6);
  const WeylWord& wp = fixed_words(e6, 6).wP;
  for (int v = 0; v < d.num_vertices(); ++v) {
    TorusPoly p = expand_plucker(e6, 6, d.labels[v]);
    CHECK(!p.is_zero());
    CHECK(p.is_homogeneous());
    CHECK(p.total_degree() == d.labels[v].degree);
    // minuscule exponent bound and root-graded homogeneity
    Weight diff_expected(e6.rank, 0);
    for (int r = 0; r < e6.rank; ++r)
      diff_expected[r] = d.weights[v][r] - d.weights[d.sink][r];
    for (const auto& [e, c] : p.terms) {
      CHECK(c == 1);
      Weight diff(e6.rank, 0);
      for (int j = 0; j < 16; ++j) {
        CHECK(e[j] <= 1);
        if (e[j])
          for (int r = 0; r < e6.rank; ++r) diff[r] += e6.cartan[r][wp[j] - 1];
      }
      CHECK(diff == diff_expected);
    }
  }
}

TEST_CASE("type A oracle: Gr(2,4) and Gr(2,5)") {
  for (auto [name, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"A4", 2}}) {
    CartanType t = CartanType::parse(name);
    const WeightDiagram& d = plucker_diagram(t, k);
    int n = t.rank + 1;
    int m = d.rep_index;  // exterior power of the Plucker representation
    auto g = type_a_torus_matrix(t, k);
    int l = static_cast<int>(fixed_words(t, k).wP.size());

    // weight of e_i in fundamental coordinates
    auto basis_weight = [&](int i) {  // 1-based
      Weight w(t.rank, 0);
      if (i <= t.rank) w[i - 1] += 1;
      if (i >= 2 && i - 1 <= t.rank) w[i - 2] -= 1;
      return w;
    };
    // enumerate m-subsets, match to diagram vertices by weight
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 1);
    int matched = 0;
    while (true) {
      Weight w(t.rank, 0);
      for (int i : idx) {
        Weight bw = basis_weight(i);
        for (int r = 0; r < t.rank; ++r) w[r] += bw[r];
      }
      int v = d.vertex_by_weight(w);
      REQUIRE(v >= 0);
      ++matched;
      // oracle minor: rows = last m indices, cols = idx
      std::vector<std::vector<TorusPoly>> sub;
      for (int r = n - m + 1; r <= n; ++r) {
        std::vector<TorusPoly> row;
        for (int c : idx) row.push_back(g[r - 1][c - 1]);
        sub.push_back(row);
      }
      CHECK(expand_plucker(t, k, d.labels[v]) == poly_det(sub, l));
      // next combination
      int pos = m - 1;
      while (pos >= 0 && idx[pos] == n - (m - 1 - pos)) --pos;
      if (pos < 0) break;
      idx[pos]++;
      for (int q = pos + 1; q < m; ++q) idx[q] = idx[q - 1] + 1;
    }
    CHECK(matched == d.num_vertices());
  }
}

TEST_CASE("exact divide") {
  CartanType e6 = CartanType::parse("E6");
  TorusPoly p1 = expand_plucker(e6, 6, "p1");
  TorusPoly p0 = expand_plucker(e6, 6, "p0");
  CHECK(exact_divide(p1, p0) == p1);
  CHECK(exact_divide(p1, p1) == TorusPoly::constant(16, 1));

  TorusPoly p16 = expand_plucker(e6, 6, "p16");
  CHECK(exact_divide(p16 * p1, p16) == p1);
  CHECK_THROWS_AS(exact_divide(p1, p16), std::domain_error);

  // inexact coefficient
  TorusPoly two = TorusPoly::constant(16, 2);
  TorusPoly three = TorusPoly::constant(16, 3);
  CHECK_THROWS_AS(exact_divide(three, two), std::domain_error);
}

TEST_CASE("torus poly io") {
  TorusPoly p = TorusPoly::monomial(3, {2, 0, 1}, 5) + TorusPoly::constant(3, -1);
  CHECK(p.to_string() == "-1 + 5 * a1^2 a3");
  CHECK(p.to_json().find("\"nvars\":3") != std::string::npos);
}
