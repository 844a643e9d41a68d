#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f1q/quiver.hpp"

namespace f1q {

struct RootedTree {
  Quiver tree;
  VertexIndex root = 0;
};

// s[k-1] = number of subtrees with k vertices that contain the root.
std::vector<std::uint64_t> rooted_subtree_counts(const RootedTree& t);

// f(n) = sum_k coeffs[k-1] * f(n-k) for n >= valid_from.
struct LinearRecursion {
  std::vector<std::int64_t> coeffs;
  std::size_t valid_from = 0;
  std::string description;

  std::size_t order() const { return coeffs.size(); }
  // Value at n from the values at n-1..n-order; values[m] = f(m).
  std::int64_t predict(const std::vector<std::int64_t>& values, std::size_t n) const;
};

// Integer polynomial, leading coefficient first.
struct CharPolynomial {
  std::vector<std::int64_t> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double eval(double x) const;
  std::string to_string() const;
  friend bool operator==(const CharPolynomial&, const CharPolynomial&) = default;
};

CharPolynomial char_polynomial(const LinearRecursion& r);

// Real root in (1, inf) by bisection; needs p(1) < 0 or an explicit bracket
// with a sign change. Throws kNoBracket otherwise.
double dominant_root(const CharPolynomial& p, double tol = 1e-12,
                     std::optional<std::pair<double, double>> bracket = std::nullopt);

// A rooted tree glued to a loop at its root. Throws kWrongShape.
RootedTree loop_tree_of(const Quiver& qt);
LinearRecursion loop_tree_recursion(const Quiver& qt);

// Pseudotree whose central cycle is a directed cycle; cycle[p] is the p-th
// vertex along the arrows, starting from the smallest id, and trees[p] the
// tree hanging at it.
struct EquiorientedLayout {
  std::vector<VertexIndex> cycle;
  std::vector<RootedTree> trees;
  std::vector<std::size_t> tree_sizes;
  std::size_t position(VertexIndex v) const;  // throws kInvalidArgument
};
EquiorientedLayout equioriented_layout(const Quiver& q);  // throws kNotEquioriented

std::vector<std::uint64_t> pseudotree_step(const Quiver& q, std::string_view cycle_vertex);

// Recursion of spines from i to f obtained by substituting the step relation
// once around the cycle.
LinearRecursion compose_cycle_recursion(const Quiver& q, std::string_view i, std::string_view f);

// Decorated spines from i to f with d vertices, by dynamic programming.
std::uint64_t q_if_count(const Quiver& q, std::string_view i, std::string_view f, std::size_t d);

// Recursion for the number of nilpotent indecomposables of an equioriented
// pseudotree (a loop glued to a tree included).
LinearRecursion ni_recursion(const Quiver& q);

enum class NilClass { kL0, kL1, kLoopArrow, kL2 };
std::string_view to_string(NilClass c);
std::string_view representative_name(NilClass c);
NilClass classify_nil(const Quiver& q);  // throws kDisconnectedQuiver

}  // namespace f1q
