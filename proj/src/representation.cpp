#include "f1q/representation.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "f1q/canonical.hpp"

namespace f1q {

Winding make_representation(std::shared_ptr<const Quiver> base, std::vector<VertexIndex> colors,
                            const std::vector<IndexedArrow>& arrows) {
  std::vector<std::pair<VertexIndex, VertexIndex>> ends;
  std::vector<ArrowIndex> amap;
  ends.reserve(arrows.size());
  amap.reserve(arrows.size());
  for (const auto& a : arrows) {
    ends.emplace_back(a.source, a.target);
    amap.push_back(a.color);
  }
  Quiver total = Quiver::indexed(colors.size(), ends);
  return Winding(QuiverMap(std::move(total), std::move(base), std::move(colors), std::move(amap)));
}

Winding zero_representation(std::shared_ptr<const Quiver> base) {
  return make_representation(std::move(base), {}, {});
}

Winding simple(std::shared_ptr<const Quiver> base, std::string_view vertex_id) {
  VertexIndex v = base->vertex_index(vertex_id);
  return make_representation(std::move(base), {v}, {});
}

std::vector<IndexedArrow> indexed_arrows(const Winding& m) {
  std::vector<IndexedArrow> out;
  out.reserve(m.total().arrow_count());
  for (ArrowIndex a = 0; a < m.total().arrow_count(); ++a) {
    const Arrow& arr = m.total().arrow(a);
    out.push_back({arr.source, arr.target, m.arrow_image(a)});
  }
  return out;
}

DimensionVector dimension_vector(const Winding& m) {
  DimensionVector d(m.base().vertex_count(), 0);
  for (VertexIndex v : m.vertex_map()) ++d[v];
  return d;
}

std::size_t dimension(const Winding& m) { return m.total().vertex_count(); }

bool is_nilpotent(const Winding& m) {
  // Kahn's algorithm: acyclic iff every vertex gets removed.
  const Quiver& g = m.total();
  std::vector<std::size_t> indeg(g.vertex_count());
  std::vector<VertexIndex> ready;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    indeg[v] = g.in_arrows(v).size();
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexIndex v = ready.back();
    ready.pop_back();
    ++removed;
    for (ArrowIndex a : g.out_arrows(v)) {
      if (--indeg[g.arrow(a).target] == 0) ready.push_back(g.arrow(a).target);
    }
  }
  return removed == g.vertex_count();
}

bool is_indecomposable(const Winding& m) { return !m.total().empty() && is_connected(m.total()); }

Winding restrict_to(const Winding& m, std::span<const VertexIndex> vertices) {
  Quiver sub = full_subquiver(m.total(), vertices);
  std::vector<VertexIndex> vmap(sub.vertex_count());
  std::vector<ArrowIndex> amap(sub.arrow_count());
  for (VertexIndex v = 0; v < vmap.size(); ++v) {
    vmap[v] = m.vertex_image(m.total().vertex_index(sub.vertex_id(v)));
  }
  for (ArrowIndex a = 0; a < amap.size(); ++a) {
    amap[a] = m.arrow_image(m.total().arrow_index(sub.arrow(a).id));
  }
  return Winding(QuiverMap(std::move(sub), m.base_ptr(), std::move(vmap), std::move(amap)));
}

std::vector<Winding> decompose(const Winding& m) {
  std::size_t count = 0;
  auto comp = weak_components(m.total(), &count);
  std::vector<std::vector<VertexIndex>> parts(count);
  for (VertexIndex v = 0; v < comp.size(); ++v) parts[comp[v]].push_back(v);
  std::vector<Winding> out;
  out.reserve(count);
  for (const auto& p : parts) out.push_back(restrict_to(m, p));
  return out;
}

Winding direct_sum(const Winding& a, const Winding& b) {
  if (!(a.base() == b.base())) throw Error(ErrorCode::kBaseMismatch, "direct sum over different bases");
  std::vector<VertexIndex> colors = a.vertex_map();
  colors.insert(colors.end(), b.vertex_map().begin(), b.vertex_map().end());
  std::vector<IndexedArrow> arrows = indexed_arrows(a);
  const std::size_t shift = a.total().vertex_count();
  for (auto arr : indexed_arrows(b)) {
    arr.source += shift;
    arr.target += shift;
    arrows.push_back(arr);
  }
  return make_representation(a.base_ptr(), std::move(colors), arrows);
}

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalForm canonical_form(const Winding& m) {
  const Quiver& g = m.total();
  ColoredDigraph cg;
  cg.vertex_colors.reserve(g.vertex_count());
  for (VertexIndex v : m.vertex_map()) cg.vertex_colors.push_back(static_cast<std::uint32_t>(v));
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    cg.edges.push_back({static_cast<std::uint32_t>(g.arrow(a).source),
                        static_cast<std::uint32_t>(g.arrow(a).target),
                        static_cast<std::uint32_t>(m.arrow_image(a))});
  }
  CanonicalLabeling lab = canonical_labeling(cg);

  CanonicalForm out;
  out.key.bytes.reserve(lab.certificate.size() * 2);
  for (auto w : lab.certificate) {
    out.key.bytes.push_back(static_cast<std::uint8_t>(w >> 8));
    out.key.bytes.push_back(static_cast<std::uint8_t>(w & 0xff));
  }
  out.automorphisms = lab.automorphisms;

  std::vector<VertexIndex> colors(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) colors[lab.position[v]] = m.vertex_image(v);
  std::vector<IndexedArrow> arrows;
  arrows.reserve(g.arrow_count());
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    arrows.push_back({lab.position[g.arrow(a).source], lab.position[g.arrow(a).target],
                      m.arrow_image(a)});
  }
  std::sort(arrows.begin(), arrows.end());
  out.witness = make_representation(m.base_ptr(), std::move(colors), arrows);
  return out;
}

CanonicalKey canonical_key(const Winding& m) { return canonical_form(m).key; }

std::uint64_t aut_count(const Winding& m) { return canonical_form(m).automorphisms; }

std::uint64_t count_isomorphisms(const Winding& a, const Winding& b) {
  const Quiver& ga = a.total();
  const Quiver& gb = b.total();
  if (ga.vertex_count() != gb.vertex_count() || ga.arrow_count() != gb.arrow_count()) return 0;
  const std::size_t n = ga.vertex_count();
  using Key = std::tuple<VertexIndex, VertexIndex, ArrowIndex>;
  std::map<Key, int> mult_a, mult_b;
  for (ArrowIndex e = 0; e < ga.arrow_count(); ++e) {
    ++mult_a[{ga.arrow(e).source, ga.arrow(e).target, a.arrow_image(e)}];
  }
  for (ArrowIndex e = 0; e < gb.arrow_count(); ++e) {
    ++mult_b[{gb.arrow(e).source, gb.arrow(e).target, b.arrow_image(e)}];
  }
  auto count_b = [&](const Key& k) {
    auto it = mult_b.find(k);
    return it == mult_b.end() ? 0 : it->second;
  };
  std::vector<VertexIndex> image(n);
  std::vector<bool> used(n, false);
  std::uint64_t total = 0;
  // Vertices are assigned in index order; an arrow is checked once both of
  // its endpoints are assigned.
  auto rec = [&](auto&& self, VertexIndex v) -> void {
    if (v == n) {
      ++total;
      return;
    }
    for (VertexIndex w = 0; w < n; ++w) {
      if (used[w] || b.vertex_image(w) != a.vertex_image(v)) continue;
      image[v] = w;
      bool ok = true;
      for (const auto& [k, c] : mult_a) {
        auto [s, t, col] = k;
        if (std::max(s, t) != v) continue;
        if (count_b({image[s], image[t], col}) != c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
  };
  rec(rec, 0);
  return total;
}

std::vector<VertexIndex> mask_to_vertices(std::uint64_t mask) {
  std::vector<VertexIndex> out;
  while (mask) {
    out.push_back(static_cast<VertexIndex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

bool is_closed(const Quiver& total, std::span<const VertexIndex> vertices, SubFlavor flavor) {
  std::vector<bool> in(total.vertex_count(), false);
  for (VertexIndex v : vertices) in.at(v) = true;
  for (const Arrow& a : total.arrows()) {
    if (flavor == SubFlavor::kArrowTargetClosed && in[a.source] && !in[a.target]) return false;
    if (flavor == SubFlavor::kArrowSourceClosed && in[a.target] && !in[a.source]) return false;
  }
  return true;
}

void for_each_closed_subset(const Quiver& total, SubFlavor flavor,
                            const std::function<void(std::uint64_t)>& visit) {
  const std::size_t n = total.vertex_count();
  if (n > 64) throw Error(ErrorCode::kBudgetExceeded, "closed subsets need at most 64 vertices");
  // forward[v]: vertices forced in when v is in; backward: forced out when v is out.
  std::vector<std::uint64_t> forward(n, 0), backward(n, 0);
  for (const Arrow& a : total.arrows()) {
    VertexIndex from = a.source, to = a.target;
    if (flavor == SubFlavor::kArrowSourceClosed) std::swap(from, to);
    forward[from] |= std::uint64_t{1} << to;
    backward[to] |= std::uint64_t{1} << from;
  }
  auto close = [&](std::uint64_t seed, const std::vector<std::uint64_t>& step) {
    std::uint64_t set = seed, frontier = seed;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto v : mask_to_vertices(frontier)) next |= step[v];
      frontier = next & ~set;
      set |= next;
    }
    return set;
  };
  auto rec = [&](auto&& self, VertexIndex v, std::uint64_t in, std::uint64_t out) -> void {
    while (v < n && (((in | out) >> v) & 1)) ++v;
    if (v == n) {
      visit(in);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t excl = close(bit, backward);
    if (!(excl & in)) self(self, v + 1, in, out | excl);
    std::uint64_t incl = close(bit, forward);
    if (!(incl & out)) self(self, v + 1, in | incl, out);
  };
  rec(rec, 0, 0, 0);
}

std::vector<ClosedVertexSet> closed_subsets(const Winding& m, SubFlavor flavor,
                                            const std::optional<DimensionVector>& d) {
  if (d && d->size() != m.base().vertex_count()) {
    throw Error(ErrorCode::kInvalidArgument, "dimension vector length does not match base");
  }
  std::vector<ClosedVertexSet> out;
  for_each_closed_subset(m.total(), flavor, [&](std::uint64_t mask) {
    auto vs = mask_to_vertices(mask);
    if (d) {
      DimensionVector dv(d->size(), 0);
      for (auto v : vs) ++dv[m.vertex_image(v)];
      if (dv != *d) return;
    }
    out.push_back({std::move(vs), flavor});
  });
  return out;
}

std::pair<Winding, Winding> sub_and_quotient(const Winding& m, const ClosedVertexSet& s) {
  if (!is_closed(m.total(), s.vertices, SubFlavor::kArrowTargetClosed)) {
    throw Error(ErrorCode::kNotClosed, "vertex set is not closed under arrow targets");
  }
  std::vector<bool> in(m.total().vertex_count(), false);
  for (auto v : s.vertices) in[v] = true;
  std::vector<VertexIndex> rest;
  for (VertexIndex v = 0; v < in.size(); ++v) {
    if (!in[v]) rest.push_back(v);
  }
  return {restrict_to(m, s.vertices), restrict_to(m, rest)};
}

std::uint64_t hom_count(const Winding& v, const Winding& w) {
  if (!(v.base() == w.base())) throw Error(ErrorCode::kBaseMismatch, "hom between different bases");
  std::map<CanonicalKey, std::uint64_t> targets;
  for_each_closed_subset(w.total(), SubFlavor::kArrowTargetClosed, [&](std::uint64_t mask) {
    ++targets[canonical_key(restrict_to(w, mask_to_vertices(mask)))];
  });
  std::uint64_t total = 0;
  for_each_closed_subset(v.total(), SubFlavor::kArrowSourceClosed, [&](std::uint64_t mask) {
    CanonicalForm f = canonical_form(restrict_to(v, mask_to_vertices(mask)));
    auto it = targets.find(f.key);
    if (it != targets.end()) total += it->second * f.automorphisms;
  });
  return total;
}

}  // namespace f1q
