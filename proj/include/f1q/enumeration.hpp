#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "f1q/representation.hpp"

namespace f1q {

struct EnumerationOptions {
  std::size_t max_dimension = 12;
  unsigned jobs = 1;
  std::size_t max_classes = 5'000'000;  // per dimension
};

struct IsoClass {
  CanonicalKey key;
  Winding witness;  // canonical witness
};

// Nilpotent indecomposables of a fixed base, one witness per class, sorted
// by key. Dimensions are computed on demand and cached.
class NilpotentEnumerator {
 public:
  explicit NilpotentEnumerator(std::shared_ptr<const Quiver> base, EnumerationOptions options = {});

  const std::vector<IsoClass>& classes(std::size_t n);  // throws kBudgetExceeded
  std::size_t count(std::size_t n) { return classes(n).size(); }
  const Quiver& base() const { return *base_; }
  const std::shared_ptr<const Quiver>& base_ptr() const { return base_; }

 private:
  std::vector<IsoClass> extend(const std::vector<IsoClass>& previous) const;

  std::shared_ptr<const Quiver> base_;
  EnumerationOptions options_;
  std::vector<std::vector<IsoClass>> levels_;  // levels_[n]
};

std::vector<IsoClass> enumerate_nilpotent_indecomposables(std::shared_ptr<const Quiver> q, std::size_t n,
                                                          const EnumerationOptions& options = {});
std::size_t ni(std::shared_ptr<const Quiver> q, std::size_t n, const EnumerationOptions& options = {});

// Windings obtained from m by adding one new vertex that is a pure source or
// a pure sink with at least one arrow. Not deduplicated.
std::vector<Winding> one_vertex_extensions(const Winding& m);

struct TreePseudotreeSplit {
  std::size_t trees = 0;
  std::size_t pseudotrees = 0;
};
TreePseudotreeSplit split_tree_pseudotree(NilpotentEnumerator& e, std::size_t n);
TreePseudotreeSplit split_tree_pseudotree(std::shared_ptr<const Quiver> q, std::size_t n,
                                          const EnumerationOptions& options = {});

bool is_pseudotree(const Quiver& q);
bool is_tree_rep(const Winding& m);  // nilpotent, indecomposable, betti(total) = 0

struct SpineData {
  enum class Kind { kSpine, kBranch };
  Kind kind = Kind::kBranch;
  std::string start;   // base vertex id
  std::string finish;  // base vertex id
  std::size_t vertices_on_cycle = 0;
};
SpineData spine_classify(const Winding& t);  // throws kNotTreeRep, kNotPseudotree

// Reverses every arrow of the given color; the result lives over
// reverse_arrow(base, arrow_id).
Winding reverse_rep(const Winding& m, std::string_view arrow_id);
Winding reverse_rep(const Winding& m, std::string_view arrow_id, std::shared_ptr<const Quiver> reversed_base);

// Maps the tree classes of q through the reversal chain to q2 and checks the
// result is a bijection onto the tree classes of q2.
bool tree_count_orientation_invariance(std::shared_ptr<const Quiver> q, std::shared_ptr<const Quiver> q2,
                                       std::size_t n, const EnumerationOptions& options = {});

// 2k-dimensional representations of the two-loop quiver: a chain of color a1
// through 2k..1 plus a2-arrows from {2k..k+1} onto a permutation of {k..1}.
std::vector<Winding> factorial_family(std::size_t k);

}  // namespace f1q
