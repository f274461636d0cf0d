#ifndef COMINUS_CLUSTER_HPP
#define COMINUS_CLUSTER_HPP

#include <string>
#include <vector>

#include "cominus/plucker.hpp"
#include "cominus/repspace.hpp"

namespace cominus {

// Positions count letters of w0 from the right, matching the wP prefix; the
// t_i of parabolic indices get virtual positions beyond l(w0) and the extra
// frozen minor Delta_{w_n,w_n} is carried with position 0.
struct SeedVariable {
  int position = 0;
  int letter = 0;        // r_position: fundamental index of the minor
  bool frozen = false;
  bool extra = false;    // the Delta_{w_n,w_n} vertex
  WeylWord u_geq;        // u_{>= position} as a word (displayed prefix slice)
  std::string expr;      // builtin table name of its Plucker expression
};

struct Seed {
  CartanType type;
  int k = 0;
  std::vector<SeedVariable> variables;
  int mutable_count() const;
  int frozen_count() const;
};

// Complement of the last occurrence of each simple index in the w0 word.
std::vector<int> exchangeable_indices(const CartanType& t, int k);

Seed initial_seed(const CartanType& t, int k);

struct Quiver {
  struct Vertex {
    std::string name;
    int letter = 0;  // 0 for the extra vertex
    int rank = 0;    // ascending position rank within its letter column
    bool frozen = false;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> arrows;  // vertex indices

  int vertex_by_name(const std::string& n) const;
  std::string to_dot() const;
  std::string to_json() const;
  // canonical arrow set on (letter, rank) keys, for fixture comparison
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrow_keys() const;
};

Quiver build_gls_quiver(const CartanType& t, int k);
Quiver build_cmp_quiver(const CartanType& t, int k);

struct ClusterReport {
  struct Item {
    std::string name;
    int position = 0;
    bool frozen = false;
    bool skipped = false;
    bool pass = false;
    double seconds = 0;
  };
  std::vector<Item> items;
  bool pass = true;
};

// Checks every seed variable with a table expression:
// expand_minor(transposed) == eval_on_torus(expression), exactly. With
// deep == false the E7 varpi_4 minors are skipped.
ClusterReport verify_cluster_expressions(const CartanType& t, int k, bool deep);

namespace fixtures {
// Arrow lists of the reference quiver figures on (letter, rank) keys.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> gls_quiver_fixture(
    const CartanType& t);
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> cmp_quiver_fixture(
    const CartanType& t);
}  // namespace fixtures

}  // namespace cominus

#endif
