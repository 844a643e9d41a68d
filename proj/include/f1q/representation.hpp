#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "f1q/quiver.hpp"

namespace f1q {

// An F1-representation is carried by its coefficient quiver: a winding of the
// total quiver onto the base.
using Representation = Winding;

// Indexed by base vertex.
using DimensionVector = std::vector<std::size_t>;

struct IndexedArrow {
  VertexIndex source;
  VertexIndex target;
  ArrowIndex color;  // base arrow

  friend auto operator<=>(const IndexedArrow&, const IndexedArrow&) = default;
};

// Winding with indexed ids "v0.." / "e0..": vertex i lies over colors[i],
// arrows keep the given order.
Winding make_representation(std::shared_ptr<const Quiver> base, std::vector<VertexIndex> colors,
                            const std::vector<IndexedArrow>& arrows);
Winding zero_representation(std::shared_ptr<const Quiver> base);
// Simple representation at one base vertex.
Winding simple(std::shared_ptr<const Quiver> base, std::string_view vertex_id);

std::vector<IndexedArrow> indexed_arrows(const Winding& m);

DimensionVector dimension_vector(const Winding& m);
std::size_t dimension(const Winding& m);
bool is_nilpotent(const Winding& m);
bool is_indecomposable(const Winding& m);
std::vector<Winding> decompose(const Winding& m);
Winding direct_sum(const Winding& a, const Winding& b);

// Full subrepresentation on the given total-quiver vertices (ids kept).
Winding restrict_to(const Winding& m, std::span<const VertexIndex> vertices);

struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  CanonicalKey key;
  std::uint64_t automorphisms = 1;
  Winding witness;  // m relabeled into canonical order
};

CanonicalForm canonical_form(const Winding& m);
CanonicalKey canonical_key(const Winding& m);
std::uint64_t aut_count(const Winding& m);

// Number of coefficient isomorphisms a -> b by exhaustive search.
std::uint64_t count_isomorphisms(const Winding& a, const Winding& b);

enum class SubFlavor { kArrowTargetClosed, kArrowSourceClosed };

struct ClosedVertexSet {
  std::vector<VertexIndex> vertices;  // sorted
  SubFlavor flavor = SubFlavor::kArrowTargetClosed;

  friend bool operator==(const ClosedVertexSet&, const ClosedVertexSet&) = default;
};

bool is_closed(const Quiver& total, std::span<const VertexIndex> vertices, SubFlavor flavor);

// Visits every closed subset as a bitmask over total-quiver vertices (at
// most 64 vertices). Order: lexicographic in the include/exclude decisions.
void for_each_closed_subset(const Quiver& total, SubFlavor flavor,
                            const std::function<void(std::uint64_t)>& visit);

std::vector<ClosedVertexSet> closed_subsets(const Winding& m, SubFlavor flavor,
                                            const std::optional<DimensionVector>& d = std::nullopt);

// (subrepresentation on s, quotient on the complement).
std::pair<Winding, Winding> sub_and_quotient(const Winding& m, const ClosedVertexSet& s);

std::uint64_t hom_count(const Winding& v, const Winding& w);

std::vector<VertexIndex> mask_to_vertices(std::uint64_t mask);

}  // namespace f1q
