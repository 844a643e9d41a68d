#include "f1q/coverings.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "f1q/error.hpp"

namespace f1q {

CoveringReport covering_report(const QuiverMap& m) {
  CoveringReport r;
  const Quiver& g = m.domain();
  const Quiver& q = m.codomain();
  r.is_quiver_map = validate_quiver_map(m);
  {
    std::vector<bool> hit_v(q.vertex_count(), false), hit_a(q.arrow_count(), false);
    for (auto v : m.vertex_map()) hit_v[v] = true;
    for (auto a : m.arrow_map()) hit_a[a] = true;
    r.is_surjective = std::all_of(hit_v.begin(), hit_v.end(), [](bool b) { return b; }) &&
                      std::all_of(hit_a.begin(), hit_a.end(), [](bool b) { return b; });
  }
  r.local_out_bijective.assign(g.vertex_count(), false);
  r.local_in_bijective.assign(g.vertex_count(), false);
  auto images = [&](const std::vector<ArrowIndex>& arrows) {
    std::vector<ArrowIndex> out;
    for (auto a : arrows) out.push_back(m.arrow_image(a));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto sorted = [](std::vector<ArrowIndex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  bool all = true;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    const VertexIndex v = m.vertex_image(x);
    r.local_out_bijective[x] = images(g.out_arrows(x)) == sorted(q.out_arrows(v));
    r.local_in_bijective[x] = images(g.in_arrows(x)) == sorted(q.in_arrows(v));
    if (!r.local_out_bijective[x] || !r.local_in_bijective[x]) {
      r.boundary_vertices.push_back(g.vertex_id(x));
      all = false;
    }
  }
  r.strict = r.is_quiver_map && r.is_surjective && all;
  return r;
}

bool check_covering_implies_winding(const QuiverMap& m) {
  if (!covering_report(m).strict) return true;
  return static_cast<bool>(is_winding(m));
}

namespace {

std::vector<std::int64_t> labels(const GammaEConfig& cfg) {
  const std::size_t n = cfg.base->vertex_count();
  if (cfg.labeling.empty()) {
    std::vector<std::int64_t> l(n);
    std::iota(l.begin(), l.end(), 1);
    return l;
  }
  if (cfg.labeling.size() != n) throw Error(ErrorCode::kInvalidArgument, "labeling has wrong length");
  std::vector<std::int64_t> sorted = cfg.labeling;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != static_cast<std::int64_t>(i + 1)) throw Error(ErrorCode::kInvalidArgument, "labeling is not a bijection onto 1..n");
  }
  return cfg.labeling;
}

std::string copy_id(const std::string& id, std::size_t k) { return id + "@" + std::to_string(k); }

}  // namespace

Winding build_gamma_e(const GammaEConfig& cfg) {
  if (!cfg.base) throw Error(ErrorCode::kInvalidArgument, "no base quiver");
  if (cfg.copies == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one copy");
  const Quiver& q = *cfg.base;
  const ArrowIndex e = q.arrow_index(cfg.e);
  labels(cfg);
  std::vector<std::string> vs;
  std::vector<ArrowSpec> as;
  std::map<std::string, std::string> vmap, amap;
  for (std::size_t k = 1; k <= cfg.copies; ++k) {
    for (const auto& v : q.vertices()) {
      vs.push_back(copy_id(v, k));
      vmap[vs.back()] = v;
    }
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (a == e) {
        if (k == cfg.copies) continue;
        as.push_back({copy_id(arr.id, k), copy_id(q.vertex_id(arr.source), k), copy_id(q.vertex_id(arr.target), k + 1)});
      } else {
        as.push_back({copy_id(arr.id, k), copy_id(q.vertex_id(arr.source), k), copy_id(q.vertex_id(arr.target), k)});
      }
      amap[as.back().id] = arr.id;
    }
  }
  return Winding(QuiverMap::from_ids(Quiver(vs, as), cfg.base, vmap, amap));
}

Grading gamma_e_grading(const Winding& w, const GammaEConfig& cfg) {
  const auto l = labels(cfg);
  const std::int64_t offset = 2 * static_cast<std::int64_t>(cfg.base->vertex_count());
  Grading g;
  for (const auto& id : w.total().vertices()) {
    auto at = id.rfind('@');
    if (at == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "vertex " + id + " is not a copy");
    const std::int64_t k = std::stoll(id.substr(at + 1));
    const VertexIndex v = cfg.base->vertex_index(id.substr(0, at));
    g[id] = l[v] + offset * (k - 1);
  }
  return g;
}

Winding restrict_to_arrows(const Winding& w, const std::set<std::string>& a) {
  std::vector<bool> keep_color(w.base().arrow_count(), false);
  for (const auto& id : a) keep_color[w.base().arrow_index(id)] = true;
  const Quiver& g = w.total();
  std::set<std::string> vs;
  std::vector<ArrowSpec> as;
  std::map<std::string, std::string> vmap, amap;
  for (ArrowIndex x = 0; x < g.arrow_count(); ++x) {
    if (!keep_color[w.arrow_image(x)]) continue;
    const Arrow& arr = g.arrow(x);
    as.push_back({arr.id, g.vertex_id(arr.source), g.vertex_id(arr.target)});
    amap[arr.id] = w.base().arrow(w.arrow_image(x)).id;
    for (auto v : {arr.source, arr.target}) {
      vs.insert(g.vertex_id(v));
      vmap[g.vertex_id(v)] = w.base().vertex_id(w.vertex_image(v));
    }
  }
  return Winding(QuiverMap::from_ids(Quiver({vs.begin(), vs.end()}, as), w.base_ptr(), vmap, amap));
}

namespace {

// Union-find classes along the given arrows; representative is the
// smallest index.
std::vector<VertexIndex> merge_along(const Quiver& q, const std::vector<bool>& arrows) {
  std::vector<VertexIndex> parent(q.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (!arrows[a]) continue;
    VertexIndex s = find(q.arrow(a).source), t = find(q.arrow(a).target);
    if (s < t) parent[t] = s;
    else parent[s] = t;
  }
  for (VertexIndex x = 0; x < parent.size(); ++x) parent[x] = find(x);
  return parent;
}

}  // namespace

Contraction contract(const Winding& w, const std::set<std::string>& a) {
  const Quiver& q = w.base();
  const Quiver& g = w.total();
  std::vector<bool> in_a(q.arrow_count(), false);
  for (const auto& id : a) in_a[q.arrow_index(id)] = true;
  std::vector<bool> over_a(g.arrow_count(), false);
  for (ArrowIndex x = 0; x < g.arrow_count(); ++x) over_a[x] = in_a[w.arrow_image(x)];

  const auto qrep = merge_along(q, in_a);
  const auto grep = merge_along(g, over_a);

  std::vector<std::string> qv, gv;
  std::vector<ArrowSpec> qa, ga;
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (qrep[v] == v) qv.push_back(q.vertex_id(v));
  }
  for (ArrowIndex x = 0; x < q.arrow_count(); ++x) {
    if (in_a[x]) continue;
    qa.push_back({q.arrow(x).id, q.vertex_id(qrep[q.arrow(x).source]), q.vertex_id(qrep[q.arrow(x).target])});
  }
  std::map<std::string, std::string> vmap, amap;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (grep[v] != v) continue;
    gv.push_back(g.vertex_id(v));
    vmap[g.vertex_id(v)] = q.vertex_id(qrep[w.vertex_image(v)]);
  }
  for (ArrowIndex x = 0; x < g.arrow_count(); ++x) {
    if (over_a[x]) continue;
    ga.push_back({g.arrow(x).id, g.vertex_id(grep[g.arrow(x).source]), g.vertex_id(grep[g.arrow(x).target])});
    amap[g.arrow(x).id] = q.arrow(w.arrow_image(x)).id;
  }
  auto qq = std::make_shared<const Quiver>(qv, qa);
  Contraction c;
  c.map = QuiverMap::from_ids(Quiver(gv, ga), qq, vmap, amap);
  c.is_winding = validate_quiver_map(c.map) && static_cast<bool>(is_winding(c.map));
  c.vertex_class.resize(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    c.vertex_class[v] = c.map.domain().vertex_index(g.vertex_id(grep[v]));
  }
  return c;
}

namespace {

// Integrates arrow slopes over a spanning forest (roots at 0); nullopt when
// some cycle does not close up.
std::optional<std::vector<std::int64_t>> integrate(const Quiver& g, const std::vector<std::int64_t>& slope) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<std::int64_t>> v(n);
  for (VertexIndex root = 0; root < n; ++root) {
    if (v[root]) continue;
    v[root] = 0;
    std::vector<VertexIndex> stack{root};
    while (!stack.empty()) {
      VertexIndex x = stack.back();
      stack.pop_back();
      for (auto a : g.out_arrows(x)) {
        VertexIndex y = g.arrow(a).target;
        if (!v[y]) {
          v[y] = *v[x] + slope[a];
          stack.push_back(y);
        }
      }
      for (auto a : g.in_arrows(x)) {
        VertexIndex y = g.arrow(a).source;
        if (!v[y]) {
          v[y] = *v[x] - slope[a];
          stack.push_back(y);
        }
      }
    }
  }
  std::vector<std::int64_t> out(n);
  for (VertexIndex x = 0; x < n; ++x) out[x] = *v[x];
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    if (out[g.arrow(a).target] - out[g.arrow(a).source] != slope[a]) return std::nullopt;
  }
  return out;
}

}  // namespace

NiceSequence lift_nice_sequence(const Winding& w, const std::set<std::string>& a, const NiceSequence& seq_quotient,
                                const NiceSequence& seq_restricted, const SearchBudget& budget) {
  const Contraction c = contract(w, a);
  if (!c.is_winding) throw Error(ErrorCode::kPreconditionFailed, "contraction is not a winding");
  const Winding r = restrict_to_arrows(w, a);
  if (!is_nice_sequence(c.map, seq_quotient) || !distinguishes(c.map, seq_quotient)) {
    throw Error(ErrorCode::kPreconditionFailed, "quotient sequence does not distinguish vertices");
  }
  if (!is_nice_sequence(r, seq_restricted) || !distinguishes(r, seq_restricted)) {
    throw Error(ErrorCode::kPreconditionFailed, "restricted sequence does not distinguish vertices");
  }
  const Quiver& g = w.total();
  NiceSequence out;
  // Quotient gradings are constant along contracted arrows.
  for (const auto& gq : seq_quotient) {
    const auto vq = grading_values(c.map, gq);
    std::vector<std::int64_t> v(g.vertex_count());
    for (VertexIndex x = 0; x < v.size(); ++x) v[x] = vq[c.vertex_class[x]];
    out.push_back(make_grading(w, v));
  }
  // Restricted gradings keep their slopes on contracted arrows and are flat
  // elsewhere, when that integrates.
  for (const auto& gr : seq_restricted) {
    std::vector<std::int64_t> slope(g.arrow_count(), 0);
    for (ArrowIndex x = 0; x < g.arrow_count(); ++x) {
      auto ri = r.total().find_arrow(g.arrow(x).id);
      if (!ri) continue;
      const Arrow& ra = r.total().arrow(*ri);
      slope[x] = gr.at(r.total().vertex_id(ra.target)) - gr.at(r.total().vertex_id(ra.source));
    }
    auto v = integrate(g, slope);
    if (!v) continue;
    Grading cand = make_grading(w, *v);
    if (is_relative_nice(w, out, cand)) out.push_back(std::move(cand));
  }
  if (!distinguishes(w, out)) {
    auto done = extend_distinguishing_sequence(w, out, budget);
    if (!done) throw Error(ErrorCode::kBudgetExceeded, "could not separate the remaining vertices");
    out = std::move(*done);
  }
  return out;
}

}  // namespace f1q
