#include "f1q/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "f1q/error.hpp"

namespace f1q {

namespace {

using Cert = std::vector<std::uint16_t>;

struct Component {
  std::vector<std::uint32_t> colors;
  std::vector<ColoredDigraph::Edge> edges;
  // adjacency entries: (neighbor, color, outgoing?)
  struct Adj {
    std::uint32_t other;
    std::uint32_t color;
    bool out;
  };
  std::vector<std::vector<Adj>> adj;
};

std::size_t count_cells(const std::vector<std::uint32_t>& cell) {
  if (cell.empty()) return 0;
  return *std::max_element(cell.begin(), cell.end()) + 1;
}

// Equitable refinement. Cell ids stay ordered by (old id, neighborhood
// signature), so the result is independent of vertex numbering.
void refine(const Component& g, std::vector<std::uint32_t>& cell) {
  const std::size_t n = cell.size();
  std::vector<std::vector<std::uint64_t>> sig(n);
  std::vector<std::uint32_t> order(n);
  std::size_t cells = count_cells(cell);
  while (true) {
    for (std::uint32_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(cell[v]);
      for (const auto& a : g.adj[v]) {
        s.push_back((std::uint64_t{a.out} << 63) | (std::uint64_t{a.color} << 32) | cell[a.other]);
      }
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      cell[order[i]] = next;
    }
    const std::size_t now = n == 0 ? 0 : next + 1;
    if (now == cells) return;
    cells = now;
  }
}

Cert certificate(const Component& g, const std::vector<std::uint32_t>& pos) {
  const std::size_t n = g.colors.size();
  Cert cert;
  cert.reserve(2 + n + 3 * g.edges.size());
  cert.push_back(static_cast<std::uint16_t>(n));
  cert.push_back(static_cast<std::uint16_t>(g.edges.size()));
  std::vector<std::uint16_t> colors(n);
  for (std::size_t v = 0; v < n; ++v) colors[pos[v]] = static_cast<std::uint16_t>(g.colors[v]);
  cert.insert(cert.end(), colors.begin(), colors.end());
  std::vector<std::array<std::uint16_t, 3>> edges;
  edges.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    edges.push_back({static_cast<std::uint16_t>(pos[e.source]),
                     static_cast<std::uint16_t>(pos[e.target]),
                     static_cast<std::uint16_t>(e.color)});
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) cert.insert(cert.end(), e.begin(), e.end());
  return cert;
}

struct Search {
  const Component& g;
  Cert best;
  std::vector<std::uint32_t> best_pos;
  std::uint64_t hits = 0;

  void run(std::vector<std::uint32_t> cell) {
    refine(g, cell);
    const std::size_t n = cell.size();
    if (count_cells(cell) == n) {
      Cert c = certificate(g, cell);
      if (best_pos.empty() || c < best) {
        best = std::move(c);
        best_pos = cell;
        hits = 1;
      } else if (c == best) {
        ++hits;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<std::uint32_t> size(n, 0);
    for (auto c : cell) ++size[c];
    std::uint32_t target = 0;
    while (size[target] < 2) ++target;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (cell[v] != target) continue;
      std::vector<std::uint32_t> child(n);
      for (std::uint32_t u = 0; u < n; ++u) {
        child[u] = 2 * cell[u] + (cell[u] == target && u != v ? 1 : 0);
      }
      run(std::move(child));
    }
  }
};

std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

CanonicalLabeling canonical_labeling(const ColoredDigraph& g) {
  const std::size_t n = g.size();
  if (n > 0xffff || g.edges.size() > 0xffff) {
    throw Error(ErrorCode::kBudgetExceeded, "graph too large for canonical labeling");
  }
  // Weak components by union-find.
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    if (e.source >= n || e.target >= n) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    if (e.color > 0xffff) throw Error(ErrorCode::kInvalidArgument, "color out of range");
    parent[find(e.source)] = find(e.target);
  }
  for (auto c : g.vertex_colors) {
    if (c > 0xffff) throw Error(ErrorCode::kInvalidArgument, "color out of range");
  }

  std::vector<std::uint32_t> comp_of(n), local(n);
  std::vector<std::vector<std::uint32_t>> members;
  {
    std::vector<std::int64_t> id(n, -1);
    for (std::uint32_t v = 0; v < n; ++v) {
      auto r = find(v);
      if (id[r] < 0) {
        id[r] = static_cast<std::int64_t>(members.size());
        members.emplace_back();
      }
      comp_of[v] = static_cast<std::uint32_t>(id[r]);
      local[v] = static_cast<std::uint32_t>(members[comp_of[v]].size());
      members[comp_of[v]].push_back(v);
    }
  }

  struct Labeled {
    Cert cert;
    std::vector<std::uint32_t> pos;  // local canonical positions
    std::uint64_t aut;
    std::uint32_t index;
  };
  std::vector<Component> comps(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    comps[c].adj.resize(members[c].size());
    for (auto v : members[c]) comps[c].colors.push_back(g.vertex_colors[v]);
  }
  for (const auto& e : g.edges) {
    auto& comp = comps[comp_of[e.source]];
    std::uint32_t s = local[e.source], t = local[e.target];
    comp.edges.push_back({s, t, e.color});
    comp.adj[s].push_back({t, e.color, true});
    comp.adj[t].push_back({s, e.color, false});
  }

  std::vector<Labeled> labeled;
  labeled.reserve(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Search search{comps[c], {}, {}, 0};
    std::vector<std::uint32_t> cell(comps[c].colors.size());
    // Initial cells ordered by color.
    std::vector<std::uint32_t> sorted = comps[c].colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < cell.size(); ++v) {
      cell[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), comps[c].colors[v]) - sorted.begin());
    }
    search.run(std::move(cell));
    labeled.push_back({std::move(search.best), std::move(search.best_pos), search.hits,
                       static_cast<std::uint32_t>(c)});
  }
  std::stable_sort(labeled.begin(), labeled.end(),
                   [](const Labeled& a, const Labeled& b) { return a.cert < b.cert; });

  CanonicalLabeling out;
  out.certificate.push_back(static_cast<std::uint16_t>(labeled.size()));
  out.position.assign(n, 0);
  std::uint32_t offset = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    const auto& l = labeled[i];
    out.certificate.insert(out.certificate.end(), l.cert.begin(), l.cert.end());
    const auto& mem = members[l.index];
    for (std::size_t k = 0; k < mem.size(); ++k) out.position[mem[k]] = offset + l.pos[k];
    offset += static_cast<std::uint32_t>(mem.size());
    out.automorphisms *= l.aut;
    run = (i > 0 && labeled[i - 1].cert == l.cert) ? run + 1 : 1;
    if (i + 1 == labeled.size() || labeled[i + 1].cert != l.cert) out.automorphisms *= factorial(run);
  }
  return out;
}

}  // namespace f1q
