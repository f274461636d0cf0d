#ifndef COMINUS_ROOTDATA_HPP
#define COMINUS_ROOTDATA_HPP

#include <string>
#include <vector>

namespace cominus {

// Integer vector in the fundamental-weight basis; entry i-1 is c_i(mu).
using Weight = std::vector<int>;
// Integer vector in the simple-root basis.
using RootVector = std::vector<int>;
// Sequence of simple-reflection indices, 1-based.
using WeylWord = std::vector<int>;

// Simply-laced Cartan datum with Bourbaki labeling.
struct CartanType {
  char series = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // rank x rank, symmetric

  static CartanType make(char series, int rank);
  static CartanType parse(const std::string& name);  // "E6", "A3", "D5", ...
  std::string name() const;

  int a(int i, int j) const { return cartan[i - 1][j - 1]; }
  bool adjacent(int i, int j) const { return i != j && cartan[i - 1][j - 1] < 0; }
  Weight fundamental(int k) const;
  // alpha_i written in the fundamental-weight basis (column i of the Cartan matrix).
  Weight simple_root_weight(int i) const;
  bool operator==(const CartanType& o) const { return series == o.series && rank == o.rank; }
};

// Weyl group element as its matrix in the simple-root basis:
// column j holds the root coordinates of w(alpha_j).
struct WeylElt {
  std::vector<std::vector<int>> mat;  // rank x rank
  static WeylElt identity(int rank);
  bool is_identity() const;
  bool operator==(const WeylElt& o) const { return mat == o.mat; }
  RootVector apply(const RootVector& beta) const;
};

// s_i(mu) = mu - c_i(mu) alpha_i.
Weight reflect(const CartanType& t, int i, const Weight& mu);
// Action of a word on a weight, rightmost letter first.
Weight apply_word(const CartanType& t, const WeylWord& w, const Weight& mu);

WeylElt simple_reflection(const CartanType& t, int i);
WeylElt word_to_elt(const CartanType& t, const WeylWord& w);
WeylElt compose(const WeylElt& a, const WeylElt& b);  // a then b... returns a*b as maps: (a*b)(x)=a(b(x))
WeylElt inverse(const WeylElt& a);

// All positive roots, in a deterministic BFS order from the simple roots.
const std::vector<RootVector>& positive_roots(const CartanType& t);
bool is_positive_root_vector(const RootVector& v);

int length(const CartanType& t, const WeylElt& w);
bool is_reduced(const CartanType& t, const WeylWord& w);
// Lexicographically-least reduced word of w (smallest left descent first).
WeylWord reduced_word(const CartanType& t, WeylElt w);

// Minuscule fundamental-weight indices of the given type (equals the
// cominuscule indices in the simply-laced case).
std::vector<int> minuscule_indices(const CartanType& t);
bool is_minuscule(const CartanType& t, int k);

// Involution sigma with w0(varpi_k) = -varpi_{sigma(k)}.
int dual_index(const CartanType& t, int k);

struct FixedWords {
  WeylWord wP;   // minimal representative of w0 W_P
  WeylWord wop;  // longest element of W_P
  WeylWord w0;   // longest element, stored as s_{r_l0} ... s_{r_1} read left to right
};

// The built-in words for (E6,6) and (E7,7) are the ones fixed in the source
// data tables; all other minuscule (type,k) get deterministic computed words.
// Position conventions: r_i denotes the i-th letter counted from the *end* of
// w0, so (r_1..r_lP) is exactly wP and w0 = [reverse(wop), reverse(wP)].
FixedWords fixed_words(const CartanType& t, int k);

// Inversion roots beta_(1) = alpha_{r_l}, beta_(j) = s_{r_l}...s_{r_{l-j+2}}(alpha_{r_{l-j+1}}).
std::vector<RootVector> inversion_roots(const CartanType& t, const WeylWord& word);

// w' = wP * (minimal representative of wop s_k W_P)^{-1}, as a reduced word.
WeylWord w_prime(const CartanType& t, int k);

// All position subsets of `within` (0-based, ascending) whose ordered product
// equals the element of `target` and whose size is length(target).
std::vector<std::vector<int>> reduced_subexpressions(const CartanType& t,
                                                     const WeylWord& target,
                                                     const WeylWord& within);

// Serialization helpers ("1,3,4,2").
std::string word_to_string(const WeylWord& w);
WeylWord word_from_string(const std::string& s);

}  // namespace cominus

#endif
