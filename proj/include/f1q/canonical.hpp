#pragma once

#include <cstdint>
#include <vector>

namespace f1q {

// Vertex- and edge-colored directed multigraph, the input of canonical
// labeling. Colors are small integers; edges are (source, target, color).
struct ColoredDigraph {
  struct Edge {
    std::uint32_t source;
    std::uint32_t target;
    std::uint32_t color;
  };
  std::vector<std::uint32_t> vertex_colors;
  std::vector<Edge> edges;

  std::size_t size() const { return vertex_colors.size(); }
};

struct CanonicalLabeling {
  // Serialized canonical graph: equal iff the inputs are isomorphic.
  std::vector<std::uint16_t> certificate;
  // position[v] = canonical index of vertex v.
  std::vector<std::uint32_t> position;
  // Order of the automorphism group (color preserving).
  std::uint64_t automorphisms = 1;
};

// Partition refinement with individualization. Each weak component is
// labeled on its own; components are then ordered by certificate.
CanonicalLabeling canonical_labeling(const ColoredDigraph& g);

}  // namespace f1q
