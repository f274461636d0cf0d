#include "cominus/nobody.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cominus {

// ---------------------------------------------------------------------------
// Valuation tables

std::map<PluckerLabel, ValuationVector> plucker_valuation_table(const CartanType& t, int k,
                                                                bool check_fixture) {
  const WeightDiagram& d = plucker_diagram(t, k);
  std::map<PluckerLabel, ValuationVector> out;
  for (int v = 0; v < d.num_vertices(); ++v)
    out[d.labels[v]] = valuation(expand_plucker(t, k, d.labels[v]));
  if (check_fixture) {
    const auto& fx = fixtures::valuation_fixture(t);
    if (fx.size() != out.size()) throw std::runtime_error("valuation fixture size mismatch");
    for (const auto& [name, digits] : fx) {
      auto it = out.find(label_from_string(name));
      std::string expect = digits;
      // The source table for the 56-vertex case numbers the pairwise-commuting
      // letters at word positions 13..15 in the opposite span order; its rows
      // carry the 13<->15 transposition relative to the fixed word.
      if (t.rank == 7) std::swap(expect[12], expect[14]);
      if (it == out.end() || valuation_to_string(it->second) != expect)
        throw std::runtime_error("valuation fixture mismatch at " + name);
    }
  }
  return out;
}

std::string valuation_table_csv(const CartanType& t, int k) {
  std::ostringstream os;
  for (const auto& [l, v] : plucker_valuation_table(t, k))
    os << label_to_string(l) << "," << valuation_to_string(v) << "\n";
  return os.str();
}

std::vector<Point> valuation_points(const CartanType& t, int k) {
  std::vector<Point> out;
  for (const auto& [l, v] : plucker_valuation_table(t, k)) out.emplace_back(v.begin(), v.end());
  return out;
}

long g_pred_fast = 0, g_pred_corank = 0, g_pred_interp = 0;

// ---------------------------------------------------------------------------
// Exact small linear algebra

namespace {

using i128 = __int128;

int sign_of(const i128& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }
int sign_of(const mpz_class& x) { return sgn(x); }
int sign_of(const mpq_class& x) { return sgn(x); }

mpz_class to_mpz(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : x;
  mpz_class out = 0;
  mpz_class base = 1;
  while (u) {
    out += base * static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    base <<= 64;
    u >>= 64;
  }
  return neg ? mpz_class(-out) : out;
}

// Fraction-free determinant (Bareiss). Entries of 0/1-shifted matrices stay
// far inside __int128 for sizes up to 28.
i128 det_i128(std::vector<std::vector<i128>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  i128 prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int cc = c + 1; cc < n; ++cc)
        m[r][cc] = (m[c][c] * m[r][cc] - m[r][c] * m[c][cc]) / prev;
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

mpz_class det_mpz(std::vector<std::vector<mpz_class>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int cc = c + 1; cc < n; ++cc)
        m[r][cc] = (m[c][c] * m[r][cc] - m[r][c] * m[c][cc]) / prev;
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return mpz_class(sign * m[n - 1][n - 1]);
}

// ---------------------------------------------------------------------------
// Orientation predicate under the moment-curve perturbation p_i(t) = p_i +
// t (g_i, g_i^2, ..., g_i^m), g_i = global index + 1. The top t-coefficient is
// a Vandermonde determinant, so the sign at t -> 0+ always resolves.

struct Perturbed {
  const std::vector<Point>* pts;    // projected coordinates
  const std::vector<long>* global;  // global indices
  mutable std::map<int, std::vector<mpz_class>> wcache;  // point id -> g^1..g^n

  const std::vector<mpz_class>& wpow(int id, int n) const {
    auto it = wcache.find(id);
    if (it != wcache.end() && static_cast<int>(it->second.size()) >= n + 1) return it->second;
    std::vector<mpz_class> w(n + 1, 0);
    mpz_class g((*global)[id] + 1);
    mpz_class pw = 1;
    for (int c = 1; c <= n; ++c) {
      pw *= g;
      w[c] = pw;
    }
    return wcache[id] = std::move(w);
  }

  // rows (1, x_i); i128 matrix of the unperturbed tuple
  std::vector<std::vector<i128>> base_matrix(const std::vector<int>& tuple) const {
    int n = static_cast<int>(tuple.size());
    std::vector<std::vector<i128>> m(n, std::vector<i128>(n));
    for (int r = 0; r < n; ++r) {
      m[r][0] = 1;
      const Point& p = (*pts)[tuple[r]];
      for (int c = 1; c < n; ++c) m[r][c] = p[c - 1];
    }
    return m;
  }

  int orient(const std::vector<int>& tuple) const {
    auto m = base_matrix(tuple);
    i128 d0 = det_i128(m);
    if (d0 != 0) { ++g_pred_fast; return sign_of(d0); }
    int s = corank_sign(tuple);
    if (s != 2) { ++g_pred_corank; return s; }
    ++g_pred_interp;
    if (getenv("COMINUS_DUMP_INTERP") && g_pred_interp < 4) {
      fprintf(stderr, "interp tuple:");
      for (int id : tuple) {
        fprintf(stderr, " g%ld[", (*global)[id]);
        for (long c : (*pts)[id]) fprintf(stderr, "%ld", c);
        fprintf(stderr, "]");
      }
      fprintf(stderr, "\n");
    }
    return interpolate_sign(tuple);
  }

  // Sign of the lowest t-coefficient of det(M + tB) for singular M of corank
  // r: all coefficients below t^r vanish and c_r = det(A) det(Y B X) for a
  // maximal nonsingular block A of M with the block-normalized null bases
  // X (columns, M X = 0) and Y (rows, Y M = 0). Returns 2 when c_r = 0.
  int corank_sign(const std::vector<int>& tuple) const {
    int n = static_cast<int>(tuple.size());
    auto mi = base_matrix(tuple);

    // fraction-free echelon with full pivoting to find a maximal block
    auto e = mi;
    std::vector<int> rowperm(n), colperm(n);
    std::iota(rowperm.begin(), rowperm.end(), 0);
    std::iota(colperm.begin(), colperm.end(), 0);
    int permsign = 1;
    i128 prev = 1;
    int q = 0;
    for (int step = 0; step < n; ++step) {
      int pr = -1, pc = -1;
      for (int r = step; r < n && pr < 0; ++r)
        for (int c = step; c < n; ++c)
          if (e[r][c] != 0) { pr = r; pc = c; break; }
      if (pr < 0) break;
      if (pr != step) { std::swap(e[pr], e[step]); std::swap(rowperm[pr], rowperm[step]); permsign = -permsign; }
      if (pc != step) {
        for (int r = 0; r < n; ++r) std::swap(e[r][pc], e[r][step]);
        std::swap(colperm[pc], colperm[step]);
        permsign = -permsign;
      }
      for (int r = step + 1; r < n; ++r) {
        for (int c = step + 1; c < n; ++c)
          e[r][c] = (e[step][step] * e[r][c] - e[r][step] * e[step][c]) / prev;
        e[r][step] = 0;
      }
      prev = e[step][step];
      ++q;
    }
    int rk = n - q;
    if (rk == 0) return 2;

    // permuted matrix entries as mpz
    auto MP = [&](int r, int c) { return to_mpz(mi[rowperm[r]][colperm[c]]); };

    // solve the r systems A u = -M'[0..q-1][q+j] and A^T v = -M'[q+i][0..q-1]
    // via fraction-free forward elimination and rational back-substitution
    auto solve_block = [&](bool transpose) {
      std::vector<std::vector<mpz_class>> aug(q, std::vector<mpz_class>(q + rk));
      for (int r = 0; r < q; ++r) {
        for (int c = 0; c < q; ++c) aug[r][c] = transpose ? MP(c, r) : MP(r, c);
        for (int j = 0; j < rk; ++j)
          aug[r][q + j] = transpose ? -MP(q + j, r) : -MP(r, q + j);
      }
      mpz_class prevp = 1;
      for (int c = 0; c < q; ++c) {
        int piv = -1;
        for (int r = c; r < q; ++r)
          if (aug[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("pivot block not invertible");
        if (piv != c) std::swap(aug[c], aug[piv]);
        for (int r = c + 1; r < q; ++r) {
          for (int cc = c + 1; cc < q + rk; ++cc)
            aug[r][cc] = (aug[c][c] * aug[r][cc] - aug[r][c] * aug[c][cc]) / prevp;
          aug[r][c] = 0;
        }
        prevp = aug[c][c];
      }
      std::vector<std::vector<mpq_class>> sol(q, std::vector<mpq_class>(rk));
      for (int j = 0; j < rk; ++j)
        for (int r = q - 1; r >= 0; --r) {
          mpq_class s(aug[r][q + j]);
          for (int c = r + 1; c < q; ++c) s -= mpq_class(aug[r][c]) * sol[c][j];
          sol[r][j] = s / mpq_class(aug[r][r]);
        }
      return sol;
    };

    std::vector<std::vector<mpq_class>> ux = solve_block(false);
    std::vector<std::vector<mpq_class>> uy = solve_block(true);

    // rows of B in permuted order: B'[i][c] = w_{rowperm[i]}[colperm[c]-1],
    // with column 0 equal to zero.
    // compute BX (n x rk) over mpq, then YBX (rk x rk) over mpq.
    std::vector<std::vector<mpq_class>> X(n, std::vector<mpq_class>(rk, 0));
    for (int j = 0; j < rk; ++j) {
      for (int c = 0; c < q; ++c) X[c][j] = ux[c][j];
      X[q + j][j] = 1;
    }
    std::vector<std::vector<mpq_class>> Y(rk, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < rk; ++i) {
      for (int c = 0; c < q; ++c) Y[i][c] = uy[c][i];
      Y[i][q + i] = 1;
    }
    // w powers per permuted row, from the shared cache
    std::vector<const std::vector<mpz_class>*> w(n);
    for (int i = 0; i < n; ++i) w[i] = &wpow(tuple[rowperm[i]], n - 1);
    std::vector<std::vector<mpq_class>> BX(n, std::vector<mpq_class>(rk, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < rk; ++j) {
        mpq_class s = 0;
        for (int c = 0; c < n; ++c)
          if (X[c][j] != 0 && colperm[c] != 0) s += mpq_class((*w[i])[colperm[c]]) * X[c][j];
        BX[i][j] = s;
      }
    std::vector<std::vector<mpq_class>> YBX(rk, std::vector<mpq_class>(rk, 0));
    for (int i = 0; i < rk; ++i)
      for (int j = 0; j < rk; ++j) {
        mpq_class s = 0;
        for (int c = 0; c < n; ++c)
          if (Y[i][c] != 0) s += Y[i][c] * BX[c][j];
        YBX[i][j] = s;
      }
    // det(A) sign: the q x q pivot block of the original matrix
    std::vector<std::vector<i128>> ablock(q, std::vector<i128>(q));
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < q; ++c) ablock[r][c] = mi[rowperm[r]][colperm[c]];
    int asign = sign_of(det_i128(ablock));

    // det of YBX over mpq by plain elimination
    int dsign = 1;
    bool vanished = false;
    for (int c = 0; c < rk && !vanished; ++c) {
      int piv = -1;
      for (int r = c; r < rk; ++r)
        if (YBX[r][c] != 0) { piv = r; break; }
      if (piv < 0) { vanished = true; break; }
      if (piv != c) { std::swap(YBX[c], YBX[piv]); dsign = -dsign; }
      for (int r = c + 1; r < rk; ++r) {
        if (YBX[r][c] == 0) continue;
        mpq_class f = YBX[r][c] / YBX[c][c];
        for (int cc = c; cc < rk; ++cc) YBX[r][cc] -= f * YBX[c][cc];
      }
      dsign *= sign_of(YBX[c][c]);
      YBX[c][c] = 1;
    }
    if (!vanished) return permsign * asign * dsign;

    if (rk != 1) return 2;  // deeper tangency at corank >= 2: interpolate

    // corank 1 with c_1 = 0: det(M'+tB') = t K(t) with
    // K(t) = -t E21 adj(A + t E11) E12, so the next coefficient has the sign
    // of -det(A) (E21 A^{-1} E12)
    std::vector<mpq_class> e12(q), e21(q);
    for (int r = 0; r < q; ++r) {
      // B' blocks: B'[r][c] = w[r][colperm[c]] (0 when colperm[c] == 0)
      mpq_class s(colperm[q] == 0 ? mpz_class(0) : (*w[r])[colperm[q]]);
      for (int c = 0; c < q; ++c)
        if (X[c][0] != 0 && colperm[c] != 0) s += mpq_class((*w[r])[colperm[c]]) * X[c][0];
      e12[r] = s;
    }
    for (int c = 0; c < q; ++c) {
      mpq_class s(colperm[c] == 0 ? mpz_class(0) : (*w[q])[colperm[c]]);
      for (int r = 0; r < q; ++r)
        if (Y[0][r] != 0 && colperm[c] != 0) s += Y[0][r] * mpq_class((*w[r])[colperm[c]]);
      e21[c] = s;
    }
    // solve A z = e12 with rational rhs: scale by the lcm of denominators
    mpz_class den = 1;
    for (const auto& x : e12) {
      mpz_class d = x.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    std::vector<std::vector<mpz_class>> aug(q, std::vector<mpz_class>(q + 1));
    for (int r = 0; r < q; ++r) {
      for (int c = 0; c < q; ++c) aug[r][c] = MP(r, c);
      mpq_class scaled = e12[r] * mpq_class(den);
      aug[r][q] = scaled.get_num();
    }
    mpz_class prevp = 1;
    for (int c = 0; c < q; ++c) {
      int piv = -1;
      for (int r = c; r < q; ++r)
        if (aug[r][c] != 0) { piv = r; break; }
      if (piv < 0) throw std::logic_error("pivot block lost rank");
      if (piv != c) std::swap(aug[c], aug[piv]);
      for (int r = c + 1; r < q; ++r) {
        for (int cc = c + 1; cc <= q; ++cc)
          aug[r][cc] = (aug[c][c] * aug[r][cc] - aug[r][c] * aug[c][cc]) / prevp;
        aug[r][c] = 0;
      }
      prevp = aug[c][c];
    }
    std::vector<mpq_class> z(q);
    for (int r = q - 1; r >= 0; --r) {
      mpq_class s(aug[r][q]);
      for (int c = r + 1; c < q; ++c) s -= mpq_class(aug[r][c]) * z[c];
      z[r] = s / mpq_class(aug[r][r]);
    }
    mpq_class val = 0;
    for (int c = 0; c < q; ++c) val += e21[c] * z[c];
    if (val == 0) return 2;  // third order or deeper: interpolate
    return permsign * -asign * sign_of(val);
  }

  int interpolate_sign(const std::vector<int>& tuple) const {
    int n = static_cast<int>(tuple.size());
    // evaluate det(M + tB) at t = 0..n; solve for polynomial coefficients
    std::vector<mpq_class> vals;
    for (int tval = 0; tval <= n; ++tval) {
      std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
      const int nv = n;
      for (int r = 0; r < nv; ++r) {
        m[r][0] = 1;
        const Point& p = (*pts)[tuple[r]];
        const auto& w = wpow(tuple[r], nv - 1);
        for (int c = 1; c < nv; ++c) m[r][c] = mpz_class(p[c - 1]) + tval * w[c];
      }
      vals.emplace_back(det_mpz(std::move(m)));
    }
    // Newton's divided differences give the coefficients in falling-factorial
    // form; convert by synthetic division to the monomial basis
    int pts_n = static_cast<int>(vals.size());
    std::vector<mpq_class> dd = vals;
    for (int lvl = 1; lvl < pts_n; ++lvl)
      for (int i = pts_n - 1; i >= lvl; --i)
        dd[i] = (dd[i] - dd[i - 1]) / lvl;
    // coefficients from Newton form with nodes 0,1,...,n
    std::vector<mpq_class> coeff(pts_n, 0);
    for (int i = pts_n - 1; i >= 0; --i) {
      // multiply current poly by (t - i) and add dd[i]
      for (int j = pts_n - 1; j >= 1; --j) coeff[j] = coeff[j - 1] - mpq_class(i) * coeff[j];
      coeff[0] = dd[i] - mpq_class(i) * coeff[0];
    }
    for (int j = 0; j < pts_n; ++j)
      if (coeff[j] != 0) return sign_of(coeff[j]);
    throw std::logic_error("perturbation polynomial vanished identically");
  }
};

// ---------------------------------------------------------------------------
// Placing triangulation under the perturbed predicate (beneath-beyond with
// insertion in input order).

struct BBFacet {
  std::vector<int> tuple;   // with `sign`, outward: sign * orient(tuple + x) > 0 outside
  int sign = 1;
  std::vector<long long> a;  // cached unperturbed hyperplane a.x - b of the tuple order
  long long b = 0;
  bool flat = false;
  bool alive = true;
};

struct Placing {
  const std::vector<Point>& pts;
  Perturbed pred;
  int m;
  std::vector<BBFacet> facets;
  std::vector<std::vector<int>> simplices;

  void hyperplane(BBFacet& f) const {
    // cofactor expansion of det[(1,t_0)...(1,t_{m-1}),(1,x)] along the last row
    int n = m + 1;
    f.a.assign(m, 0);
    bool any = false;
    for (int col = 0; col < n; ++col) {
      std::vector<std::vector<i128>> sub(m, std::vector<i128>(m));
      for (int r = 0; r < m; ++r) {
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == col) continue;
          sub[r][cc++] = c == 0 ? 1 : pts[f.tuple[r]][c - 1];
        }
      }
      i128 minor = det_i128(sub);
      int sgn = ((n - 1 + col) % 2) ? -1 : 1;
      i128 val = sgn * minor;
      if (val > i128(9) * 1000000000000000000LL || val < i128(-9) * 1000000000000000000LL)
        throw std::overflow_error("facet normal overflow");
      if (col == 0)
        f.b = static_cast<long long>(-val);
      else
        f.a[col - 1] = static_cast<long long>(val);
      any |= val != 0;
    }
    f.flat = !any;
  }

  int visible(const BBFacet& f, int p) const {
    if (!f.flat) {
      i128 s = -f.b;
      for (int c = 0; c < m; ++c) s += i128(f.a[c]) * pts[p][c];
      if (s != 0) return f.sign * (s > 0 ? 1 : -1);
    }
    std::vector<int> tup = f.tuple;
    tup.push_back(p);
    return f.sign * pred.orient(tup);
  }

  void run() {
    int n = static_cast<int>(pts.size());
    if (n < m + 1) throw std::invalid_argument("not enough points for a simplex");
    // deterministic seeding: the earliest affinely independent m+1 points, so
    // the starting simplex is non-flat; the rest follow in input order
    std::vector<int> s0;
    std::vector<std::vector<mpq_class>> rows;
    for (int i = 0; i < n && static_cast<int>(s0.size()) < m + 1; ++i) {
      if (s0.empty()) {
        s0.push_back(i);
        continue;
      }
      std::vector<mpq_class> r(m);
      for (int c = 0; c < m; ++c) r[c] = pts[i][c] - pts[s0[0]][c];
      // eliminate against accepted rows
      for (const auto& base : rows) {
        int lead = -1;
        for (int c = 0; c < m; ++c)
          if (base[c] != 0) { lead = c; break; }
        if (lead < 0 || r[lead] == 0) continue;
        mpq_class f = r[lead] / base[lead];
        for (int c = 0; c < m; ++c) r[c] -= f * base[c];
      }
      bool nonzero = false;
      for (int c = 0; c < m; ++c) nonzero |= r[c] != 0;
      if (!nonzero) continue;
      rows.push_back(std::move(r));
      s0.push_back(i);
    }
    if (static_cast<int>(s0.size()) < m + 1)
      throw std::invalid_argument("point set is not full-dimensional");
    std::vector<bool> used(n, false);
    for (int i : s0) used[i] = true;
    simplices.push_back(s0);
    for (int j = 0; j <= m; ++j) {
      BBFacet f;
      for (int i = 0; i <= m; ++i)
        if (i != j) f.tuple.push_back(s0[i]);
      std::vector<int> test = f.tuple;
      test.push_back(s0[j]);
      // the dropped vertex is inside, so the outward side is the other one
      f.sign = -pred.orient(test);
      if (f.sign == 0) throw std::logic_error("degenerate perturbed simplex");
      hyperplane(f);
      facets.push_back(std::move(f));
    }
    for (int p = 0; p < n; ++p) {
      if (used[p]) continue;
      std::vector<int> vis;
      for (size_t fi = 0; fi < facets.size(); ++fi)
        if (facets[fi].alive && visible(facets[fi], p) > 0) vis.push_back(static_cast<int>(fi));
      if (vis.empty()) continue;
      // horizon ridges appear once among the visible facets
      std::map<std::vector<int>, std::pair<int, int>> ridge_count;  // ridge -> (facet, slot)
      std::map<std::vector<int>, int> multiplicity;
      for (int fi : vis) {
        const auto& tpl = facets[fi].tuple;
        for (int slot = 0; slot < static_cast<int>(tpl.size()); ++slot) {
          std::vector<int> ridge;
          for (int i = 0; i < static_cast<int>(tpl.size()); ++i)
            if (i != slot) ridge.push_back(tpl[i]);
          std::sort(ridge.begin(), ridge.end());
          multiplicity[ridge]++;
          ridge_count[ridge] = {fi, slot};
        }
      }
      for (int fi : vis) {
        std::vector<int> simplex = facets[fi].tuple;
        simplex.push_back(p);
        simplices.push_back(std::move(simplex));
        facets[fi].alive = false;
      }
      for (const auto& [ridge, where] : ridge_count) {
        if (multiplicity[ridge] != 1) continue;
        BBFacet f;
        f.tuple = facets[where.first].tuple;
        f.tuple[where.second] = p;
        f.sign = facets[where.first].sign;  // slot replacement preserves orientation
        hyperplane(f);
        facets.push_back(std::move(f));
      }
    }
  }
};

std::vector<mpz_class> reduced_row(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return v;
  std::vector<mpz_class> out = v;
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  int n = static_cast<int>(points[0].size());
  std::vector<std::vector<mpq_class>> rows;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<mpq_class> r(n);
    for (int c = 0; c < n; ++c) r[c] = points[i][c] - points[0][c];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int c = 0; c < n && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[rank][c];
      for (int cc = c; cc < n; ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

Polytope hull(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  if (points.size() > 64) throw std::invalid_argument("at most 64 points supported");
  Polytope P;
  P.points = points;
  P.ambient = static_cast<int>(points[0].size());
  P.dim = affine_dimension(points);
  if (P.dim != P.ambient) return P;  // facet description only for full-dimensional input

  int D = P.ambient + 1;  // cone coordinates (a, b)
  struct Ray {
    std::vector<mpz_class> v;
    uint64_t tight = 0;
  };
  std::vector<std::vector<mpz_class>> lineality;
  for (int i = 0; i < D; ++i) {
    std::vector<mpz_class> e(D, 0);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  auto dot = [&](const std::vector<mpz_class>& y, size_t ci) {
    // constraint row (v_i, -1)
    mpz_class s = -y[D - 1];
    for (int c = 0; c < D - 1; ++c) s += y[c] * points[ci][c];
    return s;
  };

  for (size_t ci = 0; ci < points.size(); ++ci) {
    int pivot = -1;
    for (size_t li = 0; li < lineality.size(); ++li)
      if (dot(lineality[li], ci) != 0) { pivot = static_cast<int>(li); break; }
    if (pivot >= 0) {
      std::vector<mpz_class> lv = lineality[pivot];
      lineality.erase(lineality.begin() + pivot);
      mpz_class dl = dot(lv, ci);
      for (auto& l : lineality) {
        mpz_class d2 = dot(l, ci);
        if (d2 == 0) continue;
        for (int c = 0; c < D; ++c) l[c] = dl * l[c] - d2 * lv[c];
        l = reduced_row(l);
      }
      for (auto& r : rays) {
        mpz_class d2 = dot(r.v, ci);
        if (d2 != 0) {
          mpz_class scale = abs(dl);
          mpz_class shift = sgn(dl) * d2;
          for (int c = 0; c < D; ++c) r.v[c] = scale * r.v[c] - shift * lv[c];
          r.v = reduced_row(r.v);
        }
        r.tight |= 1ull << ci;
      }
      Ray r0;
      r0.v = lv;
      if (dl > 0)
        for (auto& x : r0.v) x = -x;
      r0.tight = (ci == 0) ? 0 : ((1ull << ci) - 1);
      rays.push_back(std::move(r0));
      continue;
    }
    std::vector<Ray> keep;
    std::vector<int> plus, minus;
    std::vector<mpz_class> dots(rays.size());
    for (size_t ri = 0; ri < rays.size(); ++ri) {
      dots[ri] = dot(rays[ri].v, ci);
      if (dots[ri] == 0) rays[ri].tight |= 1ull << ci;
    }
    for (size_t ri = 0; ri < rays.size(); ++ri) {
      if (dots[ri] > 0)
        plus.push_back(static_cast<int>(ri));
      else
        minus.push_back(static_cast<int>(ri));
    }
    std::vector<Ray> next;
    for (int ri : minus) next.push_back(rays[ri]);
    for (int pi : plus)
      for (int mi : minus) {
        if (dots[mi] == 0) continue;
        uint64_t t = rays[pi].tight & rays[mi].tight;
        bool adjacent = true;
        for (size_t ri = 0; ri < rays.size() && adjacent; ++ri) {
          if (static_cast<int>(ri) == pi || static_cast<int>(ri) == mi) continue;
          if ((rays[ri].tight & t) == t) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v.assign(D, 0);
        for (int c = 0; c < D; ++c) nr.v[c] = dots[pi] * rays[mi].v[c] - dots[mi] * rays[pi].v[c];
        nr.v = reduced_row(nr.v);
        nr.tight = t | (1ull << ci);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }
  if (!lineality.empty()) throw std::logic_error("unexpected lineality for full-dimensional hull");

  for (const auto& r : rays) {
    bool azero = true;
    for (int c = 0; c < D - 1; ++c) azero &= r.v[c] == 0;
    if (azero) continue;  // the trivial b >= 0 ray
    Facet f;
    f.normal.assign(r.v.begin(), r.v.end() - 1);
    f.offset = r.v[D - 1];
    f.incidence = 0;
    for (size_t i = 0; i < points.size(); ++i) {
      mpz_class s = -f.offset;
      for (int c = 0; c < D - 1; ++c) s += f.normal[c] * points[i][c];
      if (s > 0) throw std::logic_error("hull facet violated by input point");
      if (s == 0) f.incidence |= 1ull << i;
    }
    P.facets.push_back(std::move(f));
  }
  return P;
}

std::string Polytope::hrep_to_string() const {
  std::ostringstream os;
  for (const auto& f : facets) {
    bool first = true;
    for (size_t c = 0; c < f.normal.size(); ++c) {
      if (f.normal[c] == 0) continue;
      mpz_class a = abs(f.normal[c]);
      os << (sgn(f.normal[c]) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
      if (a != 1) os << a.get_str() << "*";
      os << "x" << (c + 1);
      first = false;
    }
    if (first) os << "0";
    os << " <= " << f.offset.get_str() << "\n";
  }
  return os.str();
}

mpq_class hull_volume(const std::vector<Point>& points) {
  int ambient = static_cast<int>(points[0].size());
  int dim = affine_dimension(points);
  if (dim != ambient)
    throw std::domain_error("degenerate input of affine dimension " + std::to_string(dim));
  int d = ambient;
  // canonical insertion preorder (descending coordinate sum, then lex): keeps
  // the early hull fat, which sharply reduces degenerate-position work; the
  // result is a placing triangulation of this deterministic order
  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    long sa = std::accumulate(a.begin(), a.end(), 0L);
    long sb = std::accumulate(b.begin(), b.end(), 0L);
    if (sa != sb) return sa > sb;
    return a < b;
  });
  std::vector<long> global(pts.size());
  std::iota(global.begin(), global.end(), 0L);
  Placing placing{pts, Perturbed{&pts, &global, {}}, d, {}, {}};
  placing.run();
  mpz_class total = 0;
  for (const auto& tri : placing.simplices) {
    std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m[r][c] = pts[tri[r + 1]][c] - pts[tri[0]][c];
    total += abs(det_mpz(std::move(m)));
  }
  return mpq_class(total);
}

std::vector<long> f_vector(const std::vector<Point>& points, long face_budget) {
  int ambient = static_cast<int>(points[0].size());
  Polytope P = hull(points);
  if (P.dim != ambient)
    throw std::domain_error("degenerate input of affine dimension " + std::to_string(P.dim));
  int d = ambient;

  std::set<uint64_t> seen;
  std::vector<uint64_t> queue;
  for (const auto& f : P.facets)
    if (seen.insert(f.incidence).second) queue.push_back(f.incidence);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint64_t face = queue[qi];
    for (const auto& f : P.facets) {
      uint64_t meet = face & f.incidence;
      if (meet == 0 || meet == face) continue;
      if (seen.insert(meet).second) {
        if (static_cast<long>(seen.size()) > face_budget)
          throw std::runtime_error("face budget exceeded");
        queue.push_back(meet);
      }
    }
  }
  // dimension of each face = d - rank of the active facet normals
  std::vector<long> counts(d, 0);
  for (uint64_t face : queue) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& f : P.facets)
      if ((face & f.incidence) == face) {
        std::vector<mpq_class> r(d);
        for (int c = 0; c < d; ++c) r[c] = mpq_class(f.normal[c]);
        rows.push_back(std::move(r));
      }
    int rank = 0;
    for (int c = 0; c < d && rank < static_cast<int>(rows.size()); ++c) {
      int piv = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (rows[r][c] != 0) { piv = r; break; }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r == rank || rows[r][c] == 0) continue;
        mpq_class fq = rows[r][c] / rows[rank][c];
        for (int cc = c; cc < d; ++cc) rows[r][cc] -= fq * rows[rank][cc];
      }
      ++rank;
    }
    int fdim = d - rank;
    if (fdim >= 0 && fdim < d) counts[fdim]++;
  }
  return counts;
}

std::vector<Point> zero_one_lattice_points(const Polytope& p) {
  int d = p.ambient;
  if (p.dim != d) throw std::domain_error("H-representation unavailable for degenerate input");
  for (const auto& pt : p.points)
    for (long x : pt)
      if (x != 0 && x != 1) throw std::domain_error("points must lie in the unit cube");
  int nf = static_cast<int>(p.facets.size());
  std::vector<std::vector<long long>> an(nf, std::vector<long long>(d));
  std::vector<long long> b(nf);
  for (int f = 0; f < nf; ++f) {
    for (int c = 0; c < d; ++c) {
      if (!p.facets[f].normal[c].fits_slong_p()) throw std::overflow_error("facet normal too large");
      an[f][c] = static_cast<long long>(p.facets[f].normal[c].get_si());
    }
    if (!p.facets[f].offset.fits_slong_p()) throw std::overflow_error("facet offset too large");
    b[f] = static_cast<long long>(p.facets[f].offset.get_si());
  }
  int lo = d / 2, hi = d - lo;
  std::vector<std::vector<long long>> lows(1ull << lo, std::vector<long long>(nf, 0));
  for (uint64_t mask = 0; mask < (1ull << lo); ++mask)
    for (int f = 0; f < nf; ++f) {
      long long s = 0;
      for (int c = 0; c < lo; ++c)
        if (mask & (1ull << c)) s += an[f][c];
      lows[mask][f] = s;
    }
  std::vector<Point> out;
  for (uint64_t hm = 0; hm < (1ull << hi); ++hm) {
    std::vector<long long> hs(nf, 0);
    for (int f = 0; f < nf; ++f) {
      long long s = 0;
      for (int c = 0; c < hi; ++c)
        if (hm & (1ull << c)) s += an[f][lo + c];
      hs[f] = s;
    }
    for (uint64_t lm = 0; lm < (1ull << lo); ++lm) {
      bool ok = true;
      for (int f = 0; f < nf && ok; ++f) ok = lows[lm][f] + hs[f] <= b[f];
      if (!ok) continue;
      Point pt(d);
      for (int c = 0; c < lo; ++c) pt[c] = (lm >> c) & 1;
      for (int c = 0; c < hi; ++c) pt[lo + c] = (hm >> c) & 1;
      out.push_back(std::move(pt));
    }
  }
  return out;
}

}  // namespace cominus
