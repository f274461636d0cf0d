#ifndef COMINUS_REPSPACE_HPP
#define COMINUS_REPSPACE_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cominus/expansion.hpp"
#include "cominus/minuscule.hpp"
#include "cominus/rootdata.hpp"

namespace cominus {

// A basis label of a realized module. Base realizations (minuscule diagrams,
// the adjoint) use a single index; exterior/symmetric powers hold sorted
// factor labels and tensors hold one label per slot.
using BasisLabel = std::vector<int>;

using Rat = mpq_class;
using SparseVec = std::map<BasisLabel, Rat>;

enum class Realization { Minuscule, Adjoint, Exterior, Tensor, Symmetric };

class Module;
using ModuleHandle = std::shared_ptr<const Module>;

// A concrete realization of a representation with an exact Chevalley action.
// Handles are immutable after construction.
class Module {
 public:
  virtual ~Module() = default;
  virtual Realization realization() const = 0;
  virtual const CartanType& type() const = 0;
  virtual Weight weight(const BasisLabel& b) const = 0;
  // Single application of e_i / f_i to a basis vector (no divided power).
  virtual void apply_e(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const = 0;
  virtual void apply_f(int i, const BasisLabel& b, std::vector<std::pair<BasisLabel, Rat>>& out) const = 0;
  // All basis labels of the given weight.
  virtual std::vector<BasisLabel> weight_slice(const Weight& w) const = 0;
  // Upper bound for a nonzero divided power of a single Chevalley generator.
  virtual int max_string_length() const = 0;
  virtual std::string describe() const = 0;
};

ModuleHandle minuscule_module(const CartanType& t, int k);
ModuleHandle adjoint_module(const CartanType& t);
ModuleHandle exterior_module(int p, ModuleHandle m);
ModuleHandle tensor_module(ModuleHandle a, ModuleHandle b);
ModuleHandle symmetric_module(int p, ModuleHandle m);

enum class ChevDir { Raise, Lower };

// (e_i)^m/m! . v  or  (f_i)^m/m! . v, exact.
SparseVec apply_chevalley(const Module& m, ChevDir dir, int i, int power, const SparseVec& v);

Weight weight_of(const Module& m, const SparseVec& v);  // requires homogeneity
bool is_zero(const SparseVec& v);
SparseVec scale(const SparseVec& v, const Rat& c);
std::string vec_to_string(const Module& m, const SparseVec& v);

// The unique (up to scale) highest-weight vector of weight lambda inside m,
// normalized so its lexicographically-least support label has coefficient +1.
// Throws std::runtime_error naming the solution dimension when the
// multiplicity is not one.
SparseVec highest_weight_vector(const Module& m, const Weight& lambda);

// \bar w . v for an extreme weight vector v: letters applied rightmost first,
// each acting as f_i^{c}/c! with c = c_i(current weight) >= 0.
SparseVec extreme_vector(const Module& m, const SparseVec& v_plus, const WeylWord& word);

// The realization table used for generalized minors.
ModuleHandle recommended_realization(const CartanType& t, int i);

struct MinorTrace {
  long sequences = 0;                 // distinct contributing index sequences
  std::vector<std::string> sequence_strings;
};

// Algorithm 1: the torus expansion of the generalized minor
//   transposed = false:  Delta_{varpi_i, w(varpi_i)}(u_+)      (raising scan)
//   transposed = true:   Delta^T_{w(varpi_i), w0(varpi_i)}(u_-) (lowering scan)
// over the torus of the wP word of (t, k).
TorusPoly expand_minor(const CartanType& t, int k, int i, const WeylWord& w,
                       bool transposed, MinorTrace* trace = nullptr);

// Convenience: the Lemma 3.2 / 3.4 minors Delta_{varpi_i, wP^{-1}(varpi_i)}.
TorusPoly expand_minor_wpinv(const CartanType& t, int k, int i);

}  // namespace cominus

#endif
