#include "f1q/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace f1q {

namespace {

using Poly = std::vector<std::uint64_t>;  // by degree

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly subtree_poly(const Quiver& t, VertexIndex v, VertexIndex parent, bool has_parent) {
  Poly acc{0, 1};  // z
  auto visit = [&](VertexIndex w) {
    if (has_parent && w == parent) return;
    Poly child = subtree_poly(t, w, v, true);
    child[0] += 1;
    acc = multiply(acc, child);
  };
  for (ArrowIndex a : t.out_arrows(v)) visit(t.arrow(a).target);
  for (ArrowIndex a : t.in_arrows(v)) visit(t.arrow(a).source);
  return acc;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  return s.str();
}

// Tree hanging at `root` once the arrows in `cut` are removed.
RootedTree hanging_tree(const Quiver& q, VertexIndex root, const std::vector<bool>& cut) {
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<VertexIndex> stack{root}, members;
  seen[root] = true;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    members.push_back(v);
    auto go = [&](ArrowIndex a, VertexIndex w) {
      if (!cut[a] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    };
    for (ArrowIndex a : q.out_arrows(v)) go(a, q.arrow(a).target);
    for (ArrowIndex a : q.in_arrows(v)) go(a, q.arrow(a).source);
  }
  std::vector<std::string> ids;
  for (auto v : members) ids.push_back(q.vertex_id(v));
  std::vector<ArrowSpec> arrows;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (!cut[a] && seen[arr.source] && seen[arr.target]) {
      arrows.push_back({arr.id, q.vertex_id(arr.source), q.vertex_id(arr.target)});
    }
  }
  Quiver tree(std::move(ids), std::move(arrows));
  if (betti_number(tree) != 0) throw Error(ErrorCode::kWrongShape, "hanging part is not a tree");
  VertexIndex r = tree.vertex_index(q.vertex_id(root));
  return RootedTree{std::move(tree), r};
}

}  // namespace

std::vector<std::uint64_t> rooted_subtree_counts(const RootedTree& t) {
  if (t.root >= t.tree.vertex_count()) throw Error(ErrorCode::kInvalidArgument, "root out of range");
  if (!is_connected(t.tree) || betti_number(t.tree) != 0) throw Error(ErrorCode::kWrongShape, "not a tree");
  Poly p = subtree_poly(t.tree, t.root, 0, false);
  return std::vector<std::uint64_t>(p.begin() + 1, p.end());
}

std::int64_t LinearRecursion::predict(const std::vector<std::int64_t>& values, std::size_t n) const {
  std::int64_t sum = 0;
  for (std::size_t k = 1; k <= coeffs.size(); ++k) {
    if (n >= k && n - k < values.size()) sum += coeffs[k - 1] * values[n - k];
  }
  return sum;
}

double CharPolynomial::eval(double x) const {
  double acc = 0;
  for (auto c : coeffs) acc = acc * x + static_cast<double>(c);
  return acc;
}

std::string CharPolynomial::to_string() const {
  std::ostringstream s;
  bool first = true;
  const std::size_t deg = degree();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t c = coeffs[i];
    if (c == 0) continue;
    const std::size_t power = deg - i;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s << "-";
    } else {
      s << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || power == 0) s << mag;
    if (power >= 1) s << "x";
    if (power >= 2) s << "^" << power;
    first = false;
  }
  if (first) s << "0";
  return s.str();
}

CharPolynomial char_polynomial(const LinearRecursion& r) {
  CharPolynomial p;
  p.coeffs.push_back(1);
  for (auto c : r.coeffs) p.coeffs.push_back(-c);
  return p;
}

double dominant_root(const CharPolynomial& p, double tol, std::optional<std::pair<double, double>> bracket) {
  if (p.coeffs.empty() || p.coeffs.front() == 0) throw Error(ErrorCode::kNoBracket, "zero leading coefficient");
  if (!(tol > 0)) throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  double lo, hi;
  if (bracket) {
    std::tie(lo, hi) = *bracket;
  } else {
    lo = 1.0;
    double bound = 0;
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) bound += std::abs(static_cast<double>(p.coeffs[i]));
    hi = 1.0 + bound / std::abs(static_cast<double>(p.coeffs.front()));
    if (!(p.eval(lo) < 0) || p.coeffs.front() < 0) throw Error(ErrorCode::kNoBracket, "p(1) is not negative");
  }
  double flo = p.eval(lo), fhi = p.eval(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw Error(ErrorCode::kNoBracket, "no sign change on bracket");
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double fm = p.eval(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

RootedTree loop_tree_of(const Quiver& qt) {
  if (!is_connected(qt) || betti_number(qt) != 1) throw Error(ErrorCode::kWrongShape, "expected a tree with one loop");
  std::vector<bool> cut(qt.arrow_count(), false);
  std::optional<VertexIndex> root;
  for (ArrowIndex a = 0; a < qt.arrow_count(); ++a) {
    if (qt.arrow(a).source == qt.arrow(a).target) {
      cut[a] = true;
      root = qt.arrow(a).source;
    }
  }
  if (!root) throw Error(ErrorCode::kWrongShape, "no loop");
  return hanging_tree(qt, *root, cut);
}

LinearRecursion loop_tree_recursion(const Quiver& qt) {
  RootedTree t = loop_tree_of(qt);
  auto s = rooted_subtree_counts(t);
  LinearRecursion r;
  r.coeffs.assign(s.begin(), s.end());
  r.valid_from = 2 * t.tree.vertex_count();
  r.description = "NI(n) = sum_k s_k NI(n-k), s = (" + join(r.coeffs) + ")";
  return r;
}

std::size_t EquiorientedLayout::position(VertexIndex v) const {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  if (it == cycle.end()) throw Error(ErrorCode::kInvalidArgument, "vertex is not on the central cycle");
  return static_cast<std::size_t>(it - cycle.begin());
}

EquiorientedLayout equioriented_layout(const Quiver& q) {
  if (!is_connected(q) || betti_number(q) != 1) throw Error(ErrorCode::kNotPseudotree, "expected a proper cycle");
  Cycle c = central_cycle(q);
  std::vector<bool> on_cycle(q.vertex_count(), false), cycle_arrow(q.arrow_count(), false);
  for (auto v : c.vertices) on_cycle[v] = true;
  for (auto a : c.arrows) cycle_arrow[a] = true;
  // Directed iff every cycle vertex has exactly one outgoing cycle arrow.
  std::vector<std::optional<ArrowIndex>> next(q.vertex_count());
  for (auto a : c.arrows) {
    VertexIndex s = q.arrow(a).source;
    if (next[s]) throw Error(ErrorCode::kNotEquioriented, "central cycle is not a directed cycle");
    next[s] = a;
  }
  EquiorientedLayout layout;
  VertexIndex v = c.vertices.front();
  for (std::size_t step = 0; step < c.vertices.size(); ++step) {
    if (!next[v]) throw Error(ErrorCode::kNotEquioriented, "central cycle is not a directed cycle");
    layout.cycle.push_back(v);
    v = q.arrow(*next[v]).target;
  }
  if (v != layout.cycle.front()) throw Error(ErrorCode::kNotEquioriented, "central cycle is not a directed cycle");
  for (auto u : layout.cycle) {
    layout.trees.push_back(hanging_tree(q, u, cycle_arrow));
    layout.tree_sizes.push_back(layout.trees.back().tree.vertex_count());
  }
  return layout;
}

std::vector<std::uint64_t> pseudotree_step(const Quiver& q, std::string_view cycle_vertex) {
  EquiorientedLayout layout = equioriented_layout(q);
  return rooted_subtree_counts(layout.trees[layout.position(q.vertex_index(cycle_vertex))]);
}

LinearRecursion compose_cycle_recursion(const Quiver& q, std::string_view i, std::string_view f) {
  EquiorientedLayout layout = equioriented_layout(q);
  const std::size_t n = layout.cycle.size();
  const std::size_t pi = layout.position(q.vertex_index(i));
  const std::size_t pf = layout.position(q.vertex_index(f));
  // Going once around the cycle multiplies the step polynomials of all
  // cycle vertices.
  Poly total{1};
  for (const auto& t : layout.trees) {
    auto s = rooted_subtree_counts(t);
    Poly step(s.size() + 1, 0);
    std::copy(s.begin(), s.end(), step.begin() + 1);
    total = multiply(total, step);
    if (total.size() - 1 > 64) throw Error(ErrorCode::kBudgetExceeded, "recursion order exceeds 64");
  }
  LinearRecursion r;
  r.coeffs.assign(total.begin() + 1, total.end());
  while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
  // Every step is exact except the step landing on i itself, which needs
  // the remaining dimension to exceed t_i (no one-vertex spine).
  const std::size_t m = (pf + n - pi) % n;
  std::size_t threshold = layout.tree_sizes[pi] + 1;
  for (std::size_t r_ = 0; r_ < m; ++r_) threshold += layout.tree_sizes[(pf + n - r_) % n];
  r.valid_from = threshold;
  r.description = "Q_{" + std::string(i) + "->" + std::string(f) + "}(d) = sum_k l_k Q(d-k), l = (" +
                  join(r.coeffs) + ")";
  return r;
}

std::uint64_t q_if_count(const Quiver& q, std::string_view i, std::string_view f, std::size_t d) {
  EquiorientedLayout layout = equioriented_layout(q);
  const std::size_t n = layout.cycle.size();
  const std::size_t pi = layout.position(q.vertex_index(i));
  const std::size_t pf = layout.position(q.vertex_index(f));
  std::vector<std::vector<std::uint64_t>> s;
  for (const auto& t : layout.trees) s.push_back(rooted_subtree_counts(t));
  // dp[dim][p]: spines from i ending at cycle position p with dim vertices.
  std::vector<std::vector<std::uint64_t>> dp(d + 1, std::vector<std::uint64_t>(n, 0));
  for (std::size_t k = 1; k <= s[pi].size() && k <= d; ++k) dp[k][pi] += s[pi][k - 1];
  for (std::size_t dim = 1; dim <= d; ++dim) {
    for (std::size_t p = 0; p < n; ++p) {
      if (dp[dim][p] == 0) continue;
      const std::size_t next = (p + 1) % n;
      for (std::size_t k = 1; k <= s[next].size() && dim + k <= d; ++k) {
        dp[dim + k][next] += dp[dim][p] * s[next][k - 1];
      }
    }
  }
  return dp[d][pf];
}

LinearRecursion ni_recursion(const Quiver& q) {
  EquiorientedLayout layout = equioriented_layout(q);
  LinearRecursion r;
  std::size_t threshold = 0;
  for (auto a : layout.cycle) {
    for (auto b : layout.cycle) {
      LinearRecursion part = compose_cycle_recursion(q, q.vertex_id(a), q.vertex_id(b));
      if (r.coeffs.empty()) r.coeffs = part.coeffs;
      threshold = std::max(threshold, part.valid_from);
    }
  }
  // Below max t_v some indecomposables avoid the cycle entirely.
  const std::size_t max_t = *std::max_element(layout.tree_sizes.begin(), layout.tree_sizes.end());
  r.valid_from = std::max(threshold, max_t + r.coeffs.size());
  r.description = "NI(n) = sum_k l_k NI(n-k), l = (" + join(r.coeffs) + ")";
  return r;
}

std::string_view to_string(NilClass c) {
  switch (c) {
    case NilClass::kL0: return "L0";
    case NilClass::kL1: return "L1";
    case NilClass::kLoopArrow: return "LoopArrow";
    case NilClass::kL2: return "L2";
  }
  return "?";
}

std::string_view representative_name(NilClass c) {
  switch (c) {
    case NilClass::kL0: return "single vertex";
    case NilClass::kL1: return "one loop";
    case NilClass::kLoopArrow: return "loop with one arrow";
    case NilClass::kL2: return "two loops";
  }
  return "?";
}

NilClass classify_nil(const Quiver& q) {
  switch (classify_shape(q).shape) {
    case Shape::kTree: return NilClass::kL0;
    case Shape::kTypeATildeCycle: return NilClass::kL1;
    case Shape::kProperPseudotree: return NilClass::kLoopArrow;
    case Shape::kWild: return NilClass::kL2;
  }
  return NilClass::kL2;
}

}  // namespace f1q
