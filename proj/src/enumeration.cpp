#include "f1q/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

namespace f1q {

namespace {

// Per-color endpoint occupancy of a winding's total quiver.
struct Occupancy {
  std::vector<std::set<ArrowIndex>> out_colors;
  std::vector<std::set<ArrowIndex>> in_colors;

  explicit Occupancy(const Winding& m)
      : out_colors(m.total().vertex_count()), in_colors(m.total().vertex_count()) {
    for (ArrowIndex a = 0; a < m.total().arrow_count(); ++a) {
      out_colors[m.total().arrow(a).source].insert(m.arrow_image(a));
      in_colors[m.total().arrow(a).target].insert(m.arrow_image(a));
    }
  }
};

void merge_into(std::map<CanonicalKey, Winding>& into, std::map<CanonicalKey, Winding>&& from) {
  for (auto& [k, w] : from) into.try_emplace(k, std::move(w));
}

}  // namespace

std::vector<Winding> one_vertex_extensions(const Winding& m) {
  const Quiver& base = m.base();
  const Quiver& total = m.total();
  const std::size_t n = total.vertex_count();
  Occupancy occ(m);
  std::vector<IndexedArrow> arrows = indexed_arrows(m);
  std::vector<Winding> out;

  for (VertexIndex v = 0; v < base.vertex_count(); ++v) {
    for (bool as_source : {true, false}) {
      // For each base arrow at v (in the chosen direction), the admissible
      // partners in the total quiver.
      std::vector<std::pair<ArrowIndex, std::vector<VertexIndex>>> choices;
      const auto& incident = as_source ? base.out_arrows(v) : base.in_arrows(v);
      for (ArrowIndex alpha : incident) {
        VertexIndex far = as_source ? base.arrow(alpha).target : base.arrow(alpha).source;
        std::vector<VertexIndex> partners;
        for (VertexIndex y = 0; y < n; ++y) {
          if (m.vertex_image(y) != far) continue;
          const auto& used = as_source ? occ.in_colors[y] : occ.out_colors[y];
          if (!used.contains(alpha)) partners.push_back(y);
        }
        if (!partners.empty()) choices.emplace_back(alpha, std::move(partners));
      }
      if (choices.empty()) continue;
      // Mixed-radix walk over (none | partner) per color.
      std::vector<std::size_t> pick(choices.size(), 0);
      while (true) {
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] > choices[i].second.size()) pick[i++] = 0;
        if (i == pick.size()) break;
        std::vector<VertexIndex> colors = m.vertex_map();
        colors.push_back(v);
        std::vector<IndexedArrow> ext = arrows;
        for (std::size_t c = 0; c < choices.size(); ++c) {
          if (pick[c] == 0) continue;
          VertexIndex y = choices[c].second[pick[c] - 1];
          ext.push_back(as_source ? IndexedArrow{n, y, choices[c].first} : IndexedArrow{y, n, choices[c].first});
        }
        out.push_back(make_representation(m.base_ptr(), std::move(colors), ext));
      }
    }
  }
  return out;
}

NilpotentEnumerator::NilpotentEnumerator(std::shared_ptr<const Quiver> base, EnumerationOptions options)
    : base_(std::move(base)), options_(options) {
  if (options_.jobs == 0) options_.jobs = 1;
  levels_.resize(1);  // dimension 0 has no indecomposables
}

const std::vector<IsoClass>& NilpotentEnumerator::classes(std::size_t n) {
  if (n > options_.max_dimension) {
    throw Error(ErrorCode::kBudgetExceeded,
                "dimension " + std::to_string(n) + " exceeds bound " + std::to_string(options_.max_dimension));
  }
  while (levels_.size() <= n) {
    if (levels_.size() == 1) {
      std::vector<IsoClass> simples;
      for (const auto& id : base_->vertices()) {
        CanonicalForm f = canonical_form(simple(base_, id));
        simples.push_back({std::move(f.key), std::move(f.witness)});
      }
      std::sort(simples.begin(), simples.end(),
                [](const IsoClass& a, const IsoClass& b) { return a.key < b.key; });
      levels_.push_back(std::move(simples));
    } else {
      levels_.push_back(extend(levels_.back()));
    }
  }
  return levels_[n];
}

std::vector<IsoClass> NilpotentEnumerator::extend(const std::vector<IsoClass>& previous) const {
  const unsigned jobs = std::max(1u, std::min<unsigned>(options_.jobs, static_cast<unsigned>(previous.size())));
  std::vector<std::map<CanonicalKey, Winding>> found(jobs);
  auto work = [&](unsigned j) {
    for (std::size_t i = j; i < previous.size(); i += jobs) {
      for (const Winding& w : one_vertex_extensions(previous[i].witness)) {
        CanonicalForm f = canonical_form(w);
        found[j].try_emplace(std::move(f.key), std::move(f.witness));
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  std::map<CanonicalKey, Winding> all = std::move(found[0]);
  for (unsigned j = 1; j < jobs; ++j) merge_into(all, std::move(found[j]));
  if (all.size() > options_.max_classes) {
    throw Error(ErrorCode::kBudgetExceeded, "class count exceeds " + std::to_string(options_.max_classes));
  }
  std::vector<IsoClass> out;
  out.reserve(all.size());
  for (auto& [k, w] : all) out.push_back({k, std::move(w)});
  return out;
}

std::vector<IsoClass> enumerate_nilpotent_indecomposables(std::shared_ptr<const Quiver> q, std::size_t n,
                                                          const EnumerationOptions& options) {
  NilpotentEnumerator e(std::move(q), options);
  return e.classes(n);
}

std::size_t ni(std::shared_ptr<const Quiver> q, std::size_t n, const EnumerationOptions& options) {
  NilpotentEnumerator e(std::move(q), options);
  return e.count(n);
}

bool is_pseudotree(const Quiver& q) { return !q.empty() && is_connected(q) && betti_number(q) <= 1; }

bool is_tree_rep(const Winding& m) {
  return is_indecomposable(m) && is_nilpotent(m) && betti_number(m.total()) == 0;
}

TreePseudotreeSplit split_tree_pseudotree(NilpotentEnumerator& e, std::size_t n) {
  if (!is_pseudotree(e.base())) throw Error(ErrorCode::kNotPseudotree, "base is not a pseudotree");
  TreePseudotreeSplit split;
  for (const auto& c : e.classes(n)) {
    const std::size_t b = betti_number(c.witness.total());
    if (b == 0) {
      ++split.trees;
    } else if (b == 1) {
      ++split.pseudotrees;
    } else {
      throw Error(ErrorCode::kPreconditionFailed, "indecomposable with betti number above 1");
    }
  }
  return split;
}

TreePseudotreeSplit split_tree_pseudotree(std::shared_ptr<const Quiver> q, std::size_t n,
                                          const EnumerationOptions& options) {
  NilpotentEnumerator e(std::move(q), options);
  return split_tree_pseudotree(e, n);
}

SpineData spine_classify(const Winding& t) {
  if (!is_tree_rep(t)) throw Error(ErrorCode::kNotTreeRep, "representation is not a tree representation");
  const Quiver& base = t.base();
  if (!is_connected(base) || betti_number(base) != 1) {
    throw Error(ErrorCode::kNotPseudotree, "base has no central cycle");
  }
  Cycle c = central_cycle(base);
  std::vector<bool> on_cycle(base.vertex_count(), false), cycle_arrow(base.arrow_count(), false);
  for (auto v : c.vertices) on_cycle[v] = true;
  for (auto a : c.arrows) cycle_arrow[a] = true;

  const Quiver& g = t.total();
  std::vector<VertexIndex> lifted;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) {
    if (on_cycle[t.vertex_image(x)]) lifted.push_back(x);
  }
  SpineData out;
  if (lifted.empty()) return out;
  out.kind = SpineData::Kind::kSpine;
  out.vertices_on_cycle = lifted.size();

  // The lifted vertices form a path of cycle-colored arrows.
  std::vector<int> in_deg(g.vertex_count(), 0), out_deg(g.vertex_count(), 0);
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    if (!cycle_arrow[t.arrow_image(a)]) continue;
    ++out_deg[g.arrow(a).source];
    ++in_deg[g.arrow(a).target];
  }
  std::vector<VertexIndex> ends;
  bool directed = true;
  for (auto x : lifted) {
    if (in_deg[x] + out_deg[x] <= 1) ends.push_back(x);
    if (in_deg[x] > 1 || out_deg[x] > 1) directed = false;
  }
  VertexIndex start = lifted.front(), finish = lifted.front();
  if (ends.size() == 2) {
    start = ends[0];
    finish = ends[1];
    if (directed) {
      if (in_deg[start] != 0) std::swap(start, finish);
    } else if (base.vertex_id(t.vertex_image(finish)) < base.vertex_id(t.vertex_image(start))) {
      std::swap(start, finish);
    }
  }
  out.start = base.vertex_id(t.vertex_image(start));
  out.finish = base.vertex_id(t.vertex_image(finish));
  return out;
}

Winding reverse_rep(const Winding& m, std::string_view arrow_id,
                    std::shared_ptr<const Quiver> reversed_base) {
  const ArrowIndex alpha = m.base().arrow_index(arrow_id);
  const Quiver& g = m.total();
  std::vector<ArrowSpec> arrows;
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    const Arrow& arr = g.arrow(a);
    const auto& s = g.vertex_id(arr.source);
    const auto& t = g.vertex_id(arr.target);
    arrows.push_back(m.arrow_image(a) == alpha ? ArrowSpec{arr.id, t, s} : ArrowSpec{arr.id, s, t});
  }
  Quiver total(g.vertices(), std::move(arrows));
  // Same ids on both sides, so the index tables carry over unchanged.
  return Winding(QuiverMap(std::move(total), std::move(reversed_base), m.vertex_map(), m.arrow_map()));
}

Winding reverse_rep(const Winding& m, std::string_view arrow_id) {
  return reverse_rep(m, arrow_id, std::make_shared<const Quiver>(reverse_arrow(m.base(), arrow_id)));
}

bool tree_count_orientation_invariance(std::shared_ptr<const Quiver> q, std::shared_ptr<const Quiver> q2,
                                       std::size_t n, const EnumerationOptions& options) {
  if (q->vertices() != q2->vertices() || q->arrow_count() != q2->arrow_count()) {
    throw Error(ErrorCode::kGraphMismatch, "vertex or arrow sets differ");
  }
  std::vector<std::string> flips;
  for (ArrowIndex a = 0; a < q->arrow_count(); ++a) {
    const Arrow& x = q->arrow(a);
    const Arrow& y = q2->arrow(a);
    if (x.id != y.id) throw Error(ErrorCode::kGraphMismatch, "arrow ids differ");
    if (x.source == y.source && x.target == y.target) continue;
    if (x.source == y.target && x.target == y.source) {
      flips.push_back(x.id);
      continue;
    }
    throw Error(ErrorCode::kGraphMismatch, "arrow '" + x.id + "' has different endpoints");
  }
  // Intermediate bases of the reversal chain, ending at q2.
  std::vector<std::shared_ptr<const Quiver>> chain{q};
  for (const auto& id : flips) chain.push_back(std::make_shared<const Quiver>(reverse_arrow(*chain.back(), id)));
  if (!(*chain.back() == *q2)) throw Error(ErrorCode::kGraphMismatch, "reversal chain does not reach target");
  chain.back() = q2;

  NilpotentEnumerator e1(q, options), e2(q2, options);
  std::set<CanonicalKey> image;
  std::size_t trees = 0;
  for (const auto& c : e1.classes(n)) {
    if (betti_number(c.witness.total()) != 0) continue;
    ++trees;
    Winding w = c.witness;
    for (std::size_t i = 0; i < flips.size(); ++i) w = reverse_rep(w, flips[i], chain[i + 1]);
    if (!is_nilpotent(w) || !is_indecomposable(w)) return false;
    image.insert(canonical_key(w));
  }
  std::set<CanonicalKey> targets;
  for (const auto& c : e2.classes(n)) {
    if (betti_number(c.witness.total()) == 0) targets.insert(c.key);
  }
  return image.size() == trees && image == targets;
}

std::vector<Winding> factorial_family(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  auto base = std::make_shared<const Quiver>(
      std::vector<std::string>{"o"}, std::vector<ArrowSpec>{{"a1", "o", "o"}, {"a2", "o", "o"}});
  const std::size_t n = 2 * k;
  // Index i stands for the label i + 1.
  std::vector<IndexedArrow> red;
  for (std::size_t i = n - 1; i > 0; --i) red.push_back({i, i - 1, 0});
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Winding> out;
  do {
    std::vector<IndexedArrow> arrows = red;
    for (std::size_t i = 0; i < k; ++i) {
      // a_i = 2k - i, b_i = perm applied to k - i.
      arrows.push_back({n - 1 - i, k - 1 - perm[i], 1});
    }
    out.push_back(make_representation(base, std::vector<VertexIndex>(n, 0), arrows));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace f1q
