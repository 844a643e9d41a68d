#include "f1q/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stack>

namespace f1q {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownArrow: return "UnknownArrow";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kNotQuiverMap: return "NotQuiverMap";
    case ErrorCode::kNotWinding: return "NotWinding";
    case ErrorCode::kDisconnectedQuiver: return "DisconnectedQuiver";
    case ErrorCode::kNotPseudotree: return "NotPseudotree";
    case ErrorCode::kBaseMismatch: return "BaseMismatch";
    case ErrorCode::kNotClosed: return "NotClosed";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kWrongShape: return "WrongShape";
    case ErrorCode::kNoBracket: return "NoBracket";
    case ErrorCode::kNotEquioriented: return "NotEquioriented";
    case ErrorCode::kNonIndecomposableInput: return "NonIndecomposableInput";
    case ErrorCode::kNotTreeRep: return "NotTreeRep";
    case ErrorCode::kGraphMismatch: return "GraphMismatch";
    case ErrorCode::kNotNice: return "NotNice";
    case ErrorCode::kInvalidSequence: return "InvalidSequence";
    case ErrorCode::kPartialGrading: return "PartialGrading";
    case ErrorCode::kLoopPresent: return "LoopPresent";
    case ErrorCode::kNoCertificate: return "NoCertificate";
    case ErrorCode::kDisconnectedT: return "DisconnectedT";
    case ErrorCode::kNoSink: return "NoSink";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
  }
  return "Error";
}

namespace {

std::string padded(char prefix, std::size_t i, std::size_t width) {
  std::string digits = std::to_string(i);
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

std::size_t digit_width(std::size_t count) {
  return count <= 1 ? 1 : std::to_string(count - 1).size();
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) {
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw Error(ErrorCode::kDuplicateId, "vertex '" + *dup + "'");
  }
  vertices_ = std::move(vertices);

  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowSpec& a, const ArrowSpec& b) { return a.id < b.id; });
  arrows_.reserve(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (!arrows_.empty() && arrows[i].id == arrows_.back().id) {
      throw Error(ErrorCode::kDuplicateId, "arrow '" + arrows[i].id + "'");
    }
    auto source = find_vertex(arrows[i].source);
    if (!source) {
      throw Error(ErrorCode::kUnknownVertex,
                  "arrow '" + arrows[i].id + "' source '" + arrows[i].source + "'");
    }
    auto target = find_vertex(arrows[i].target);
    if (!target) {
      throw Error(ErrorCode::kUnknownVertex,
                  "arrow '" + arrows[i].id + "' target '" + arrows[i].target + "'");
    }
    arrows_.push_back(Arrow{std::move(arrows[i].id), *source, *target});
  }
  build_adjacency();
}

Quiver Quiver::indexed(std::size_t vertex_count,
                       std::span<const std::pair<VertexIndex, VertexIndex>> arrows) {
  Quiver q;
  const std::size_t vw = digit_width(vertex_count);
  const std::size_t aw = digit_width(arrows.size());
  q.vertices_.reserve(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) q.vertices_.push_back(padded('v', i, vw));
  q.arrows_.reserve(arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].first >= vertex_count || arrows[i].second >= vertex_count) {
      throw Error(ErrorCode::kUnknownVertex, "arrow endpoint out of range");
    }
    q.arrows_.push_back(Arrow{padded('e', i, aw), arrows[i].first, arrows[i].second});
  }
  q.build_adjacency();
  return q;
}

void Quiver::build_adjacency() {
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
    out_[arrows_[a].source].push_back(a);
    in_[arrows_[a].target].push_back(a);
  }
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<ArrowIndex> Quiver::find_arrow(std::string_view id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, std::string_view key) { return a.id < key; });
  if (it == arrows_.end() || it->id != id) return std::nullopt;
  return static_cast<ArrowIndex>(it - arrows_.begin());
}

VertexIndex Quiver::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorCode::kUnknownVertex, "'" + std::string(id) + "'");
}

ArrowIndex Quiver::arrow_index(std::string_view id) const {
  if (auto a = find_arrow(id)) return *a;
  throw Error(ErrorCode::kUnknownArrow, "'" + std::string(id) + "'");
}

std::vector<std::size_t> weak_components(const Quiver& q, std::size_t* count) {
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  std::vector<VertexIndex> stack;
  for (VertexIndex start = 0; start < n; ++start) {
    if (comp[start] != n) continue;
    comp[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      auto visit = [&](VertexIndex w) {
        if (comp[w] == n) {
          comp[w] = next;
          stack.push_back(w);
        }
      };
      for (ArrowIndex a : q.out_arrows(v)) visit(q.arrow(a).target);
      for (ArrowIndex a : q.in_arrows(v)) visit(q.arrow(a).source);
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Quiver& q) {
  std::size_t count = 0;
  weak_components(q, &count);
  return count == 1;
}

std::size_t betti_number(const Quiver& q) {
  std::size_t components = 0;
  weak_components(q, &components);
  return q.arrow_count() + components - q.vertex_count();
}

std::string_view to_string(Shape shape) {
  switch (shape) {
    case Shape::kTree: return "Tree";
    case Shape::kTypeATildeCycle: return "TypeATildeCycle";
    case Shape::kProperPseudotree: return "ProperPseudotree";
    case Shape::kWild: return "Wild";
  }
  return "?";
}

ShapeClass classify_shape(const Quiver& q) {
  if (!is_connected(q)) throw Error(ErrorCode::kDisconnectedQuiver, "quiver is not connected");
  ShapeClass result;
  result.betti = betti_number(q);
  if (result.betti == 0) {
    result.shape = Shape::kTree;
  } else if (result.betti == 1) {
    bool pure_cycle = true;
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      if (q.degree(v) != 2) pure_cycle = false;
    }
    result.shape = pure_cycle ? Shape::kTypeATildeCycle : Shape::kProperPseudotree;
  } else {
    result.shape = Shape::kWild;
  }
  return result;
}

Cycle central_cycle(const Quiver& q) {
  if (betti_number(q) != 1) throw Error(ErrorCode::kNotPseudotree, "betti number is not 1");
  // Strip leaves repeatedly; with one independent cycle what remains is that
  // cycle plus isolated vertices of other (tree) components.
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<VertexIndex> leaves;
  for (VertexIndex v = 0; v < n; ++v) {
    deg[v] = q.degree(v);
    if (deg[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    VertexIndex v = leaves.back();
    leaves.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    auto drop = [&](VertexIndex w) {
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
    };
    for (ArrowIndex a : q.out_arrows(v)) drop(q.arrow(a).target);
    for (ArrowIndex a : q.in_arrows(v)) drop(q.arrow(a).source);
  }
  Cycle c;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!removed[v]) c.vertices.push_back(v);
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (!removed[q.arrow(a).source] && !removed[q.arrow(a).target]) c.arrows.push_back(a);
  }
  return c;
}

Quiver reverse_arrow(const Quiver& q, std::string_view arrow_id) {
  const ArrowIndex target = q.arrow_index(arrow_id);
  std::vector<ArrowSpec> arrows;
  arrows.reserve(q.arrow_count());
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    const auto& s = q.vertex_id(arr.source);
    const auto& t = q.vertex_id(arr.target);
    arrows.push_back(a == target ? ArrowSpec{arr.id, t, s} : ArrowSpec{arr.id, s, t});
  }
  return Quiver(q.vertices(), std::move(arrows));
}

Quiver full_subquiver(const Quiver& q, std::span<const VertexIndex> vertices) {
  std::vector<bool> keep(q.vertex_count(), false);
  std::vector<std::string> ids;
  for (VertexIndex v : vertices) {
    if (!keep.at(v)) {
      keep[v] = true;
      ids.push_back(q.vertex_id(v));
    }
  }
  std::vector<ArrowSpec> arrows;
  for (const Arrow& a : q.arrows()) {
    if (keep[a.source] && keep[a.target]) {
      arrows.push_back({a.id, q.vertex_id(a.source), q.vertex_id(a.target)});
    }
  }
  return Quiver(std::move(ids), std::move(arrows));
}

QuiverMap::QuiverMap(Quiver domain, std::shared_ptr<const Quiver> codomain,
                     std::vector<VertexIndex> vertex_map, std::vector<ArrowIndex> arrow_map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      vertex_map_(std::move(vertex_map)),
      arrow_map_(std::move(arrow_map)) {
  if (!codomain_) throw Error(ErrorCode::kInvalidArgument, "null codomain");
  if (vertex_map_.size() != domain_.vertex_count()) {
    throw Error(ErrorCode::kNotQuiverMap, "vertex map is not total");
  }
  if (arrow_map_.size() != domain_.arrow_count()) {
    throw Error(ErrorCode::kNotQuiverMap, "arrow map is not total");
  }
  for (VertexIndex v = 0; v < vertex_map_.size(); ++v) {
    if (vertex_map_[v] >= codomain_->vertex_count()) {
      throw Error(ErrorCode::kUnknownVertex, "image of '" + domain_.vertex_id(v) + "'");
    }
  }
  for (ArrowIndex a = 0; a < arrow_map_.size(); ++a) {
    if (arrow_map_[a] >= codomain_->arrow_count()) {
      throw Error(ErrorCode::kUnknownArrow, "image of '" + domain_.arrow(a).id + "'");
    }
  }
}

QuiverMap QuiverMap::from_ids(Quiver domain, std::shared_ptr<const Quiver> codomain,
                              const std::map<std::string, std::string>& vertex_map,
                              const std::map<std::string, std::string>& arrow_map) {
  std::vector<VertexIndex> vmap(domain.vertex_count());
  std::vector<ArrowIndex> amap(domain.arrow_count());
  for (const auto& [from, to] : vertex_map) {
    auto v = domain.find_vertex(from);
    if (!v) throw Error(ErrorCode::kUnknownVertex, "vertex_map key '" + from + "'");
    auto w = codomain->find_vertex(to);
    if (!w) throw Error(ErrorCode::kUnknownVertex, "vertex_map value '" + to + "'");
    vmap[*v] = *w;
  }
  for (const auto& [from, to] : arrow_map) {
    auto a = domain.find_arrow(from);
    if (!a) throw Error(ErrorCode::kUnknownArrow, "arrow_map key '" + from + "'");
    auto b = codomain->find_arrow(to);
    if (!b) throw Error(ErrorCode::kUnknownArrow, "arrow_map value '" + to + "'");
    amap[*a] = *b;
  }
  for (const auto& id : domain.vertices()) {
    if (!vertex_map.contains(id)) throw Error(ErrorCode::kNotQuiverMap, "vertex '" + id + "' unmapped");
  }
  for (const auto& arrow : domain.arrows()) {
    if (!arrow_map.contains(arrow.id)) {
      throw Error(ErrorCode::kNotQuiverMap, "arrow '" + arrow.id + "' unmapped");
    }
  }
  return QuiverMap(std::move(domain), std::move(codomain), std::move(vmap), std::move(amap));
}

bool validate_quiver_map(const QuiverMap& m) {
  const Quiver& d = m.domain();
  const Quiver& c = m.codomain();
  for (ArrowIndex a = 0; a < d.arrow_count(); ++a) {
    const Arrow& image = c.arrow(m.arrow_image(a));
    if (image.source != m.vertex_image(d.arrow(a).source)) return false;
    if (image.target != m.vertex_image(d.arrow(a).target)) return false;
  }
  return true;
}

WindingCheck is_winding(const QuiverMap& m) {
  const Quiver& d = m.domain();
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    for (const auto* incident : {&d.out_arrows(v), &d.in_arrows(v)}) {
      std::map<ArrowIndex, ArrowIndex> seen;
      for (ArrowIndex a : *incident) {
        auto [it, inserted] = seen.emplace(m.arrow_image(a), a);
        if (!inserted) return WindingCheck{false, std::make_pair(it->second, a)};
      }
    }
  }
  return WindingCheck{};
}

Winding::Winding(QuiverMap map) : QuiverMap(std::move(map)) {
  if (!validate_quiver_map(*this)) {
    throw Error(ErrorCode::kNotQuiverMap, "source/target commutation fails");
  }
  if (auto check = is_winding(*this); !check) {
    throw Error(ErrorCode::kNotWinding, "arrows '" + domain().arrow(check.witness->first).id +
                                            "' and '" + domain().arrow(check.witness->second).id +
                                            "' share a color and an endpoint");
  }
}

QuiverMap compose(const QuiverMap& inner, const QuiverMap& outer) {
  if (!(inner.codomain() == outer.domain())) {
    throw Error(ErrorCode::kInvalidArgument, "maps are not composable");
  }
  std::vector<VertexIndex> vmap(inner.domain().vertex_count());
  std::vector<ArrowIndex> amap(inner.domain().arrow_count());
  for (VertexIndex v = 0; v < vmap.size(); ++v) vmap[v] = outer.vertex_image(inner.vertex_image(v));
  for (ArrowIndex a = 0; a < amap.size(); ++a) amap[a] = outer.arrow_image(inner.arrow_image(a));
  return QuiverMap(inner.domain(), outer.codomain_ptr(), std::move(vmap), std::move(amap));
}

Winding inclusion(std::shared_ptr<const Quiver> q, std::span<const VertexIndex> vertices) {
  Quiver sub = full_subquiver(*q, vertices);
  std::vector<VertexIndex> vmap(sub.vertex_count());
  std::vector<ArrowIndex> amap(sub.arrow_count());
  for (VertexIndex v = 0; v < vmap.size(); ++v) vmap[v] = q->vertex_index(sub.vertex_id(v));
  for (ArrowIndex a = 0; a < amap.size(); ++a) amap[a] = q->arrow_index(sub.arrow(a).id);
  return Winding(QuiverMap(std::move(sub), std::move(q), std::move(vmap), std::move(amap)));
}

}  // namespace f1q
