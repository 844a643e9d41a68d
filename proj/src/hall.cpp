#include "f1q/hall.hpp"

#include <functional>
#include <mutex>
#include <numeric>

#include "f1q/enumeration.hpp"
#include "f1q/error.hpp"

namespace f1q {

// ---- HallElement -----------------------------------------------------------

HallElement HallElement::basis(const Winding& m, std::int64_t coeff) {
  HallElement e;
  e.add(m, coeff);
  return e;
}

void HallElement::add(const CanonicalKey& key, std::int64_t coeff, const Winding& witness) {
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{coeff, witness});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

void HallElement::add(const Winding& m, std::int64_t coeff) {
  if (coeff == 0) return;
  CanonicalForm f = canonical_form(m);
  add(f.key, coeff, f.witness);
}

void HallElement::add(const HallElement& other, std::int64_t scale) {
  for (const auto& [key, term] : other.terms_) add(key, term.coeff * scale, term.witness);
}

std::int64_t HallElement::coeff(const CanonicalKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second.coeff;
}

std::int64_t HallElement::coeff(const Winding& m) const { return coeff(canonical_key(m)); }

bool operator==(const HallElement& a, const HallElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [key, term] : a.terms_) {
    if (b.coeff(key) != term.coeff) return false;
  }
  return true;
}

void TensorElement::add(const Key& key, std::int64_t coeff, const Winding& left, const Winding& right) {
  if (coeff == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, Term{coeff, left, right});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

std::int64_t TensorElement::coeff(const Winding& left, const Winding& right) const {
  auto it = terms_.find({canonical_key(left), canonical_key(right)});
  return it == terms_.end() ? 0 : it->second.coeff;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [key, term] : a.terms_) {
    auto it = b.terms_.find(key);
    if (it == b.terms_.end() || it->second.coeff != term.coeff) return false;
  }
  return true;
}

std::optional<HallElement> HallCache::find(const CanonicalKey& m, const CanonicalKey& n) const {
  std::shared_lock lock(mutex_);
  auto it = memo_.find({m, n});
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void HallCache::insert(const CanonicalKey& m, const CanonicalKey& n, HallElement value) {
  std::unique_lock lock(mutex_);
  memo_.emplace(std::make_pair(m, n), std::move(value));
}

std::size_t HallCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

// ---- extensions ------------------------------------------------------------

namespace {

constexpr std::size_t kExtensionBudget = 2'000'000;

void require_same_base(const Winding& a, const Winding& b) {
  if (!(a.base() == b.base())) throw Error(ErrorCode::kBaseMismatch, "representations over different bases");
}

struct DisjointUnion {
  std::vector<VertexIndex> colors;
  std::vector<IndexedArrow> arrows;
  std::size_t n_size = 0;  // vertices of the first summand come first
};

DisjointUnion disjoint_union(const Winding& first, const Winding& second) {
  DisjointUnion u;
  u.n_size = first.total().vertex_count();
  u.colors = first.vertex_map();
  u.colors.insert(u.colors.end(), second.vertex_map().begin(), second.vertex_map().end());
  u.arrows = indexed_arrows(first);
  for (auto a : indexed_arrows(second)) {
    a.source += u.n_size;
    a.target += u.n_size;
    u.arrows.push_back(a);
  }
  return u;
}

bool has_out(const Winding& m, VertexIndex x, ArrowIndex color) {
  for (auto a : m.total().out_arrows(x)) {
    if (m.arrow_image(a) == color) return true;
  }
  return false;
}

bool has_in(const Winding& m, VertexIndex y, ArrowIndex color) {
  for (auto a : m.total().in_arrows(y)) {
    if (m.arrow_image(a) == color) return true;
  }
  return false;
}

// Vertices of `from` that may receive a new outgoing arrow of each color,
// and vertices of `to` that may receive a new incoming one.
struct Slots {
  std::vector<std::vector<VertexIndex>> sinks;    // in `from`
  std::vector<std::vector<VertexIndex>> sources;  // in `to`
};

Slots gluing_slots(const Winding& from, const Winding& to) {
  const Quiver& q = from.base();
  Slots s;
  s.sinks.resize(q.arrow_count());
  s.sources.resize(q.arrow_count());
  for (ArrowIndex c = 0; c < q.arrow_count(); ++c) {
    for (VertexIndex x = 0; x < from.total().vertex_count(); ++x) {
      if (from.vertex_image(x) == q.arrow(c).source && !has_out(from, x, c)) s.sinks[c].push_back(x);
    }
    for (VertexIndex y = 0; y < to.total().vertex_count(); ++y) {
      if (to.vertex_image(y) == q.arrow(c).target && !has_in(to, y, c)) s.sources[c].push_back(y);
    }
  }
  return s;
}

Winding drop_arrow(const Winding& m, ArrowIndex drop) {
  std::vector<IndexedArrow> arrows;
  auto all = indexed_arrows(m);
  for (ArrowIndex a = 0; a < all.size(); ++a) {
    if (a != drop) arrows.push_back(all[a]);
  }
  return make_representation(m.base_ptr(), m.vertex_map(), arrows);
}

}  // namespace

std::vector<Winding> enumerate_extensions(const Winding& m, const Winding& n) {
  require_same_base(m, n);
  DisjointUnion u = disjoint_union(n, m);
  Slots slots = gluing_slots(m, n);
  const std::size_t colors = m.base().arrow_count();

  std::map<CanonicalKey, Winding> found;
  std::vector<IndexedArrow> extra;
  std::vector<bool> used;
  std::size_t visited = 0;

  // Per color, a partial injection from sinks of m to sources of n.
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t c, std::size_t i) {
    if (c == colors) {
      if (++visited > kExtensionBudget) throw Error(ErrorCode::kBudgetExceeded, "too many extensions");
      auto arrows = u.arrows;
      arrows.insert(arrows.end(), extra.begin(), extra.end());
      Winding r = make_representation(m.base_ptr(), u.colors, arrows);
      auto key = canonical_key(r);
      found.emplace(std::move(key), std::move(r));
      return;
    }
    if (i == 0) used.assign(n.total().vertex_count(), false);
    if (i == slots.sinks[c].size()) {
      auto saved = used;
      go(c + 1, 0);
      used = std::move(saved);
      return;
    }
    go(c, i + 1);
    const VertexIndex x = slots.sinks[c][i];
    for (auto y : slots.sources[c]) {
      if (used[y]) continue;
      used[y] = true;
      extra.push_back({u.n_size + x, y, c});
      go(c, i + 1);
      extra.pop_back();
      used[y] = false;
    }
  };
  go(0, 0);

  std::vector<Winding> out;
  out.reserve(found.size());
  for (auto& [key, r] : found) out.push_back(std::move(r));
  return out;
}

std::uint64_t subobject_count(const Winding& m, const Winding& n, const Winding& r) {
  require_same_base(m, r);
  require_same_base(n, r);
  const auto dn = dimension_vector(n);
  const auto km = canonical_key(m);
  const auto kn = canonical_key(n);
  std::uint64_t count = 0;
  for (const auto& s : closed_subsets(r, SubFlavor::kArrowTargetClosed, dn)) {
    auto [sub, quot] = sub_and_quotient(r, s);
    if (canonical_key(sub) == kn && canonical_key(quot) == km) ++count;
  }
  return count;
}

HallElement hall_product(const Winding& m, const Winding& n, HallCache* cache) {
  require_same_base(m, n);
  CanonicalKey km, kn;
  if (cache) {
    km = canonical_key(m);
    kn = canonical_key(n);
    if (auto hit = cache->find(km, kn)) return *hit;
  }
  HallElement out;
  for (const auto& r : enumerate_extensions(m, n)) {
    out.add(r, static_cast<std::int64_t>(subobject_count(m, n, r)));
  }
  if (cache) cache->insert(km, kn, out);
  return out;
}

HallElement hall_product(const HallElement& x, const HallElement& y, HallCache* cache) {
  HallElement out;
  for (const auto& [kx, tx] : x.terms()) {
    for (const auto& [ky, ty] : y.terms()) {
      out.add(hall_product(tx.witness, ty.witness, cache), tx.coeff * ty.coeff);
    }
  }
  return out;
}

bool ses_count_check(const Winding& m, const Winding& n, const Winding& r) {
  std::uint64_t direct = 0;
  for (const auto& s : closed_subsets(r, SubFlavor::kArrowTargetClosed, dimension_vector(n))) {
    auto [sub, quot] = sub_and_quotient(r, s);
    direct += count_isomorphisms(n, sub) * count_isomorphisms(quot, m);
  }
  return direct == subobject_count(m, n, r) * aut_count(m) * aut_count(n);
}

// ---- coproduct -------------------------------------------------------------

TensorElement coproduct(const HallElement& e) {
  TensorElement out;
  for (const auto& [key, term] : e.terms()) {
    const Winding& r = term.witness;
    // Indecomposable summands grouped by isomorphism type.
    std::map<CanonicalKey, std::vector<Winding>> groups;
    for (auto& part : decompose(r)) groups[canonical_key(part)].push_back(std::move(part));
    std::vector<const std::vector<Winding>*> g;
    for (const auto& [k, parts] : groups) g.push_back(&parts);
    std::vector<std::size_t> take(g.size(), 0);
    while (true) {
      Winding left = zero_representation(r.base_ptr());
      Winding right = left;
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g[i]->size(); ++j) {
          if (j < take[i]) left = direct_sum(left, (*g[i])[j]);
          else right = direct_sum(right, (*g[i])[j]);
        }
      }
      CanonicalForm lf = canonical_form(left), rf = canonical_form(right);
      out.add({lf.key, rf.key}, term.coeff, lf.witness, rf.witness);
      std::size_t i = 0;
      while (i < g.size() && take[i] == g[i]->size()) take[i++] = 0;
      if (i == g.size()) break;
      ++take[i];
    }
  }
  return out;
}

TensorElement tensor_product(const TensorElement& x, const TensorElement& y, HallCache* cache) {
  TensorElement out;
  for (const auto& [kx, tx] : x.terms()) {
    for (const auto& [ky, ty] : y.terms()) {
      HallElement l = hall_product(tx.left, ty.left, cache);
      HallElement r = hall_product(tx.right, ty.right, cache);
      for (const auto& [a, ta] : l.terms()) {
        for (const auto& [b, tb] : r.terms()) {
          out.add({a, b}, tx.coeff * ty.coeff * ta.coeff * tb.coeff, ta.witness, tb.witness);
        }
      }
    }
  }
  return out;
}

// ---- brackets --------------------------------------------------------------

HallElement commutator(const Winding& m, const Winding& n, HallCache* cache) {
  if (!is_indecomposable(m) || !is_indecomposable(n)) {
    throw Error(ErrorCode::kNonIndecomposableInput, "commutator needs indecomposable arguments");
  }
  HallElement out = hall_product(m, n, cache) - hall_product(n, m, cache);
  for (const auto& [key, term] : out.terms()) {
    if (!is_indecomposable(term.witness)) {
      throw Error(ErrorCode::kPreconditionFailed, "decomposable term survived in a commutator");
    }
  }
  return out;
}

HallElement one_arrow_gluings(const Winding& s, const Winding& t) {
  require_same_base(s, t);
  DisjointUnion u = disjoint_union(t, s);
  Slots slots = gluing_slots(s, t);
  HallElement out;
  for (ArrowIndex c = 0; c < slots.sinks.size(); ++c) {
    for (auto x : slots.sinks[c]) {
      for (auto y : slots.sources[c]) {
        auto arrows = u.arrows;
        arrows.push_back({u.n_size + x, y, c});
        out.add(make_representation(s.base_ptr(), u.colors, arrows), 1);
      }
    }
  }
  return out;
}

HallElement glue_bracket(const Winding& s, const Winding& t) {
  if (!is_tree_rep(s) || !is_tree_rep(t)) throw Error(ErrorCode::kNotTreeRep, "glue bracket needs tree modules");
  return one_arrow_gluings(s, t) - one_arrow_gluings(t, s);
}

HallElement mod_p(const HallElement& e) {
  HallElement out;
  for (const auto& [key, term] : e.terms()) {
    if (!is_pseudotree(term.witness.base())) {
      throw Error(ErrorCode::kNotPseudotree, "base quiver is not a pseudotree");
    }
    if (betti_number(term.witness.total()) != 1) out.add(key, term.coeff, term.witness);
  }
  return out;
}

HallElement epsilon_phi(const HallElement& e, std::string_view arrow_id) {
  if (e.is_zero()) return e;
  const auto& base = e.terms().begin()->second.witness.base();
  return epsilon_phi(e, arrow_id, std::make_shared<const Quiver>(reverse_arrow(base, arrow_id)));
}

HallElement epsilon_phi(const HallElement& e, std::string_view arrow_id,
                        std::shared_ptr<const Quiver> reversed_base) {
  HallElement out;
  for (const auto& [key, term] : e.terms()) {
    const Winding& s = term.witness;
    if (!is_tree_rep(s)) throw Error(ErrorCode::kNotTreeRep, "sign twist needs tree modules");
    const ArrowIndex a = s.base().arrow_index(arrow_id);
    std::size_t hits = 0;
    for (auto img : s.arrow_map()) hits += img == a;
    const std::int64_t sign = hits % 2 == 0 ? 1 : -1;
    out.add(reverse_rep(s, arrow_id, reversed_base), sign * term.coeff);
  }
  return out;
}

std::size_t count_nonsplit_ext(const Winding& s, const Winding& t) {
  if (!is_tree_rep(s) || !is_tree_rep(t)) throw Error(ErrorCode::kNotTreeRep, "extension count needs tree modules");
  return enumerate_extensions(s, t).size() - 1;
}

// ---- generator decomposition ----------------------------------------------

GeneratorDecomposition generator_decomposition(const Winding& m, HallCache* cache) {
  const Quiver& q = m.base();
  const Cycle c = central_cycle(q);
  if (!is_nilpotent(m) || !is_indecomposable(m) || betti_number(m.total()) != 1) {
    throw Error(ErrorCode::kPreconditionFailed, "expected a nilpotent indecomposable with one cycle");
  }
  auto on_cycle = [&](ArrowIndex a) { return std::binary_search(c.arrows.begin(), c.arrows.end(), a); };

  // A sink of the base cycle: both cycle arrows point into it.
  std::optional<VertexIndex> sink;
  for (auto v : c.vertices) {
    std::size_t in = 0, out = 0;
    for (auto a : q.in_arrows(v)) in += on_cycle(a);
    for (auto a : q.out_arrows(v)) out += on_cycle(a);
    if (in == 2 && out == 0) {
      sink = v;
      break;
    }
  }
  if (!sink) {
    bool oriented = true;
    for (auto v : c.vertices) {
      std::size_t in = 0;
      for (auto a : q.in_arrows(v)) in += on_cycle(a);
      oriented = oriented && in == 1;
    }
    if (oriented) throw Error(ErrorCode::kPreconditionFailed, "base cycle is equioriented");
    throw Error(ErrorCode::kNoSink, "base cycle has no sink");
  }

  const Quiver& g = m.total();
  const Cycle gc = central_cycle(g);
  std::optional<VertexIndex> u;
  for (auto x : gc.vertices) {
    if (m.vertex_image(x) == *sink) {
      u = x;
      break;
    }
  }
  if (!u) throw Error(ErrorCode::kNoSink, "no cycle vertex over the sink");
  std::vector<ArrowIndex> into;
  for (auto a : g.in_arrows(*u)) {
    if (std::binary_search(gc.arrows.begin(), gc.arrows.end(), a)) into.push_back(a);
  }
  if (into.size() != 2) throw Error(ErrorCode::kPreconditionFailed, "cycle vertex over the sink is not a sink");

  // Split along the two arrows into u.
  std::vector<VertexIndex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<VertexIndex(VertexIndex)> find = [&](VertexIndex x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    if (a == into[0] || a == into[1]) continue;
    parent[find(g.arrow(a).source)] = find(g.arrow(a).target);
  }
  std::vector<VertexIndex> tp, rest;
  for (VertexIndex x = 0; x < g.vertex_count(); ++x) (find(x) == find(*u) ? tp : rest).push_back(x);

  GeneratorDecomposition out;
  out.t = restrict_to(m, rest);
  out.t_prime = restrict_to(m, tp);
  if (rest.empty() || !is_connected(out.t.total())) {
    throw Error(ErrorCode::kDisconnectedT, "remainder is not connected");
  }
  out.alpha_tilde = g.arrow(into[0]).id;
  out.beta_tilde = g.arrow(into[1]).id;
  out.product = hall_product(out.t, out.t_prime, cache);
  out.expected.add(direct_sum(out.t_prime, out.t), 1);
  out.expected.add(drop_arrow(m, into[1]), 1);
  out.expected.add(drop_arrow(m, into[0]), 1);
  out.expected.add(m, 1);
  out.verified = out.product == out.expected;
  return out;
}

}  // namespace f1q
