#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f1q/error.hpp"

namespace f1q {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string id;
  VertexIndex source = 0;
  VertexIndex target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Arrow given by vertex ids, as read from files.
struct ArrowSpec {
  std::string id;
  std::string source;
  std::string target;
};

// Finite directed multigraph. Vertices and arrows are kept sorted by id, so
// indices are stable and iteration is deterministic. Immutable once built.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

  // Vertices "v0".."v{n-1}" and arrows "e0".. with ids zero-padded so that the
  // sorted order coincides with the given order.
  static Quiver indexed(std::size_t vertex_count,
                        std::span<const std::pair<VertexIndex, VertexIndex>> arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  bool empty() const { return vertices_.empty(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<ArrowIndex> find_arrow(std::string_view id) const;
  VertexIndex vertex_index(std::string_view id) const;  // throws kUnknownVertex
  ArrowIndex arrow_index(std::string_view id) const;    // throws kUnknownArrow

  const std::vector<ArrowIndex>& out_arrows(VertexIndex v) const { return out_.at(v); }
  const std::vector<ArrowIndex>& in_arrows(VertexIndex v) const { return in_.at(v); }
  std::size_t degree(VertexIndex v) const { return out_.at(v).size() + in_.at(v).size(); }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  void build_adjacency();

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowIndex>> out_;
  std::vector<std::vector<ArrowIndex>> in_;
};

// Weak components: component index per vertex, numbered by smallest vertex.
std::vector<std::size_t> weak_components(const Quiver& q, std::size_t* count = nullptr);
bool is_connected(const Quiver& q);

// Rank of H1 of the underlying graph: |arrows| - |vertices| + #components.
std::size_t betti_number(const Quiver& q);

enum class Shape { kTree, kTypeATildeCycle, kProperPseudotree, kWild };
std::string_view to_string(Shape shape);

struct ShapeClass {
  Shape shape = Shape::kTree;
  std::size_t betti = 0;
};

ShapeClass classify_shape(const Quiver& q);  // throws kDisconnectedQuiver

// The unique simple cycle of a betti-1 quiver.
struct Cycle {
  std::vector<VertexIndex> vertices;  // sorted
  std::vector<ArrowIndex> arrows;     // sorted
};
Cycle central_cycle(const Quiver& q);  // throws kNotPseudotree

Quiver reverse_arrow(const Quiver& q, std::string_view arrow_id);

// Full subquiver on the given vertices, ids preserved.
Quiver full_subquiver(const Quiver& q, std::span<const VertexIndex> vertices);

// A quiver map domain -> codomain given by index tables. Construction only
// checks that the tables are total and in range; the commutation law is
// checked by validate_quiver_map.
class QuiverMap {
 public:
  QuiverMap() = default;
  QuiverMap(Quiver domain, std::shared_ptr<const Quiver> codomain,
            std::vector<VertexIndex> vertex_map, std::vector<ArrowIndex> arrow_map);

  static QuiverMap from_ids(Quiver domain, std::shared_ptr<const Quiver> codomain,
                            const std::map<std::string, std::string>& vertex_map,
                            const std::map<std::string, std::string>& arrow_map);

  const Quiver& domain() const { return domain_; }
  const Quiver& codomain() const { return *codomain_; }
  const std::shared_ptr<const Quiver>& codomain_ptr() const { return codomain_; }
  const std::vector<VertexIndex>& vertex_map() const { return vertex_map_; }
  const std::vector<ArrowIndex>& arrow_map() const { return arrow_map_; }
  VertexIndex vertex_image(VertexIndex v) const { return vertex_map_.at(v); }
  ArrowIndex arrow_image(ArrowIndex a) const { return arrow_map_.at(a); }

 private:
  Quiver domain_;
  std::shared_ptr<const Quiver> codomain_ = std::make_shared<const Quiver>();
  std::vector<VertexIndex> vertex_map_;
  std::vector<ArrowIndex> arrow_map_;
};

bool validate_quiver_map(const QuiverMap& m);

struct WindingCheck {
  bool ok = true;
  // Two distinct arrows of one color sharing a source or a target.
  std::optional<std::pair<ArrowIndex, ArrowIndex>> witness;

  explicit operator bool() const { return ok; }
};
WindingCheck is_winding(const QuiverMap& m);

// A quiver map that is injective per color on sources and on targets; the
// combinatorial form of an F1-representation of the codomain.
class Winding : public QuiverMap {
 public:
  Winding() = default;
  explicit Winding(QuiverMap map);  // throws kNotQuiverMap / kNotWinding

  const Quiver& total() const { return domain(); }
  const Quiver& base() const { return codomain(); }
  const std::shared_ptr<const Quiver>& base_ptr() const { return codomain_ptr(); }
};

// outer o inner; requires inner's codomain to equal outer's domain.
QuiverMap compose(const QuiverMap& inner, const QuiverMap& outer);

// Inclusion of a full subquiver of q into q.
Winding inclusion(std::shared_ptr<const Quiver> q, std::span<const VertexIndex> vertices);

}  // namespace f1q
