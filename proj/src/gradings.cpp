#include "f1q/gradings.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <set>

#include "f1q/error.hpp"

namespace f1q {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Profile = std::vector<std::int64_t>;

std::vector<Profile> profiles(const QuiverMap& m, const NiceSequence& seq) {
  std::vector<Profile> p(m.domain().vertex_count());
  for (const auto& g : seq) {
    auto v = grading_values(m, g);
    for (std::size_t x = 0; x < v.size(); ++x) p[x].push_back(v[x]);
  }
  return p;
}

std::size_t distinct_count(const std::vector<Profile>& p) {
  std::set<Profile> s(p.begin(), p.end());
  return s.size();
}

void require_sequence(const QuiverMap& m, const NiceSequence& seq) {
  if (!is_nice_sequence(m, seq)) throw Error(ErrorCode::kInvalidSequence, "not a nice sequence");
}

bool slopes_agree(const QuiverMap& m, std::span<const std::size_t> partition, const std::vector<std::int64_t>& v) {
  const Quiver& g = m.domain();
  std::map<std::size_t, std::int64_t> slope;
  for (ArrowIndex a = 0; a < g.arrow_count(); ++a) {
    const std::int64_t s = v[g.arrow(a).target] - v[g.arrow(a).source];
    auto [it, fresh] = slope.emplace(partition[a], s);
    if (!fresh && it->second != s) return false;
  }
  return true;
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kBudgetExceeded, "lattice entry overflows 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

// Z-basis of {x in Z^k : rows . x = 0}, by unimodular row reduction of
// [rows^T | I].
std::vector<std::vector<BigInt>> integer_kernel(const std::vector<std::vector<BigInt>>& rows, std::size_t k) {
  const std::size_t r = rows.size();
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(r + k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = rows[j][i];
    a[i][r + i] = 1;
  }
  std::size_t p = 0;
  for (std::size_t j = 0; j < r && p < k; ++j) {
    while (true) {
      std::size_t best = k;
      for (std::size_t i = p; i < k; ++i) {
        if (a[i][j] != 0 && (best == k || abs(a[i][j]) < abs(a[best][j]))) best = i;
      }
      if (best == k) break;
      std::swap(a[p], a[best]);
      bool clean = true;
      for (std::size_t i = p + 1; i < k; ++i) {
        if (a[i][j] == 0) continue;
        BigInt q = a[i][j] / a[p][j];
        for (std::size_t c = 0; c < r + k; ++c) a[i][c] -= q * a[p][c];
        if (a[i][j] != 0) clean = false;
      }
      if (clean) {
        ++p;
        break;
      }
    }
  }
  std::vector<std::vector<BigInt>> out;
  for (std::size_t i = p; i < k; ++i) out.emplace_back(a[i].begin() + r, a[i].end());

  // Pairwise size reduction keeps entries small.
  auto dot = [](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    BigInt s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  for (int round = 0; round < 64; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (i == j) continue;
        BigInt jj = dot(out[j], out[j]);
        if (jj == 0) continue;
        BigInt ij = dot(out[i], out[j]);
        BigInt q = (2 * ij + jj) / (2 * jj);
        if (2 * ij + jj < 0 && (2 * ij + jj) % (2 * jj) != 0) q -= 1;
        if (q == 0) continue;
        std::vector<BigInt> cand = out[i];
        for (std::size_t c = 0; c < cand.size(); ++c) cand[c] -= q * out[j][c];
        if (dot(cand, cand) < dot(out[i], out[i])) {
          out[i] = std::move(cand);
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  // Sign convention: first nonzero entry positive.
  for (auto& v : out) {
    auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
    if (it != v.end() && *it < 0) {
      for (auto& x : v) x = -x;
    }
  }
  return out;
}

// One stage of the greedy search.
std::optional<std::vector<std::int64_t>> pick_candidate(const QuiverMap& m, const NiceSequence& seq,
                                                        const SearchBudget& budget) {
  const auto base_profiles = profiles(m, seq);
  const std::size_t before = distinct_count(base_profiles);
  const std::size_t n = base_profiles.size();
  const auto partition = arrow_partition(m, seq);
  const GradingLattice lattice = solve_nice_lattice(m, partition);
  const std::size_t d = lattice.dimension();

  std::optional<std::vector<std::int64_t>> first_refining;
  std::size_t seen = 0;
  auto consider = [&](const std::vector<std::int64_t>& values) -> bool {
    std::vector<Profile> p = base_profiles;
    for (std::size_t x = 0; x < n; ++x) p[x].push_back(values[x]);
    const std::size_t after = distinct_count(p);
    if (after == n) return true;
    if (after > before && !first_refining) first_refining = values;
    return false;
  };

  for (const auto& b : lattice.basis) {
    if (consider(b)) return b;
  }
  const std::int64_t c = budget.max_coefficient;
  if (d > 0 && c > 0) {
    std::vector<std::int64_t> coeffs(d, -c);
    while (seen < budget.max_candidates) {
      ++seen;
      if (std::any_of(coeffs.begin(), coeffs.end(), [](std::int64_t x) { return x != 0; })) {
        auto values = lattice.combine(coeffs);
        if (consider(values)) return values;
      }
      std::size_t i = d;
      while (i > 0 && coeffs[i - 1] == c) coeffs[--i] = -c;
      if (i == 0) break;
      ++coeffs[i - 1];
    }
  }
  return first_refining;
}

}  // namespace

std::vector<std::int64_t> grading_values(const QuiverMap& m, const Grading& g) {
  const Quiver& q = m.domain();
  std::vector<std::int64_t> v(q.vertex_count());
  for (VertexIndex x = 0; x < v.size(); ++x) {
    auto it = g.find(q.vertex_id(x));
    if (it == g.end()) throw Error(ErrorCode::kPartialGrading, "no value at vertex " + q.vertex_id(x));
    v[x] = it->second;
  }
  for (const auto& [id, value] : g) {
    if (!q.find_vertex(id)) throw Error(ErrorCode::kUnknownVertex, "grading names unknown vertex " + id);
  }
  return v;
}

Grading make_grading(const QuiverMap& m, std::span<const std::int64_t> values) {
  const Quiver& q = m.domain();
  if (values.size() != q.vertex_count()) throw Error(ErrorCode::kPartialGrading, "wrong number of values");
  Grading g;
  for (VertexIndex x = 0; x < values.size(); ++x) g[q.vertex_id(x)] = values[x];
  return g;
}

bool is_nice(const QuiverMap& m, const Grading& g) { return is_relative_nice(m, {}, g); }

bool is_nondegenerate(const QuiverMap& m, const Grading& g) {
  if (!is_nice(m, g)) throw Error(ErrorCode::kNotNice, "grading is not nice");
  auto v = grading_values(m, g);
  for (const auto& a : m.domain().arrows()) {
    if (v[a.target] == v[a.source]) return false;
  }
  return true;
}

std::vector<std::size_t> arrow_partition(const QuiverMap& m, const NiceSequence& seq) {
  const Quiver& q = m.domain();
  const auto p = profiles(m, seq);
  std::map<std::tuple<ArrowIndex, Profile, Profile>, std::size_t> ids;
  std::vector<std::size_t> out(q.arrow_count());
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    auto key = std::make_tuple(m.arrow_image(a), p[q.arrow(a).source], p[q.arrow(a).target]);
    auto [it, fresh] = ids.emplace(std::move(key), ids.size());
    out[a] = it->second;
  }
  return out;
}

bool is_nice_sequence(const QuiverMap& m, const NiceSequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    NiceSequence prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
    auto v = grading_values(m, seq[i]);
    if (!slopes_agree(m, arrow_partition(m, prefix), v)) return false;
  }
  return true;
}

bool is_relative_nice(const QuiverMap& m, const NiceSequence& seq, const Grading& g) {
  require_sequence(m, seq);
  return slopes_agree(m, arrow_partition(m, seq), grading_values(m, g));
}

bool distinguishes(const QuiverMap& m, const NiceSequence& seq) {
  const auto p = profiles(m, seq);
  return distinct_count(p) == p.size();
}

bool frees(const QuiverMap& m, const NiceSequence& seq, std::string_view arrow_id) {
  const Quiver& q = m.domain();
  const ArrowIndex a = q.arrow_index(arrow_id);
  const auto partition = arrow_partition(m, seq);
  std::vector<ArrowIndex> rivals;
  for (ArrowIndex b = 0; b < q.arrow_count(); ++b) {
    if (b != a && partition[b] == partition[a]) rivals.push_back(b);
  }
  if (rivals.empty()) return true;
  // Rivals share a's slope, so a grading separates a from b exactly when it
  // separates their sources. A generic lattice point avoids every such
  // hyperplane as soon as each is avoided by some generator.
  const auto lattice = solve_nice_lattice(m, partition);
  const VertexIndex sa = q.arrow(a).source;
  for (auto b : rivals) {
    const VertexIndex sb = q.arrow(b).source;
    bool split = std::any_of(lattice.basis.begin(), lattice.basis.end(),
                             [&](const std::vector<std::int64_t>& v) { return v[sa] != v[sb]; });
    if (!split) return false;
  }
  return true;
}

std::vector<std::int64_t> GradingLattice::combine(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != basis.size()) throw Error(ErrorCode::kInvalidArgument, "wrong number of coefficients");
  std::vector<std::int64_t> out(basis.empty() ? 0 : basis.front().size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t x = 0; x < out.size(); ++x) out[x] += coeffs[i] * basis[i][x];
  }
  return out;
}

GradingLattice solve_nice_lattice(const QuiverMap& m, std::span<const std::size_t> partition) {
  const Quiver& q = m.domain();
  if (partition.size() != q.arrow_count()) throw Error(ErrorCode::kInvalidArgument, "partition size mismatch");
  GradingLattice out;
  {
    std::map<std::size_t, std::size_t> renumber;
    for (auto c : partition) {
      auto [it, fresh] = renumber.emplace(c, renumber.size());
      out.arrow_class.push_back(it->second);
    }
    out.class_count = renumber.size();
  }
  const std::size_t n = q.vertex_count(), k = out.class_count;
  // Along a spanning forest each value is a combination of class slopes.
  std::vector<std::vector<BigInt>> expr(n);
  std::vector<std::size_t> comp(n, n);
  std::vector<bool> tree_arrow(q.arrow_count(), false);
  std::size_t comps = 0;
  for (VertexIndex root = 0; root < n; ++root) {
    if (comp[root] != n) continue;
    comp[root] = comps;
    expr[root].assign(k, 0);
    std::vector<VertexIndex> stack{root};
    while (!stack.empty()) {
      VertexIndex x = stack.back();
      stack.pop_back();
      auto visit = [&](ArrowIndex a, VertexIndex y, int sign) {
        if (comp[y] != n) return;
        comp[y] = comps;
        expr[y] = expr[x];
        expr[y][out.arrow_class[a]] += sign;
        tree_arrow[a] = true;
        stack.push_back(y);
      };
      for (auto a : q.out_arrows(x)) visit(a, q.arrow(a).target, 1);
      for (auto a : q.in_arrows(x)) visit(a, q.arrow(a).source, -1);
    }
    ++comps;
  }
  std::vector<std::vector<BigInt>> cycles;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (tree_arrow[a]) continue;
    std::vector<BigInt> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = expr[q.arrow(a).source][c] - expr[q.arrow(a).target][c];
    row[out.arrow_class[a]] += 1;
    if (std::any_of(row.begin(), row.end(), [](const BigInt& x) { return x != 0; })) cycles.push_back(std::move(row));
  }
  for (const auto& slopes : integer_kernel(cycles, k)) {
    std::vector<std::int64_t> values(n), sl(k);
    for (std::size_t c = 0; c < k; ++c) sl[c] = to_int64(slopes[c]);
    for (VertexIndex x = 0; x < n; ++x) {
      BigInt s = 0;
      for (std::size_t c = 0; c < k; ++c) s += expr[x][c] * slopes[c];
      values[x] = to_int64(s);
    }
    out.basis.push_back(std::move(values));
    out.slope_basis.push_back(std::move(sl));
  }
  for (std::size_t c = 0; c < comps; ++c) {
    std::vector<std::int64_t> values(n, 0);
    for (VertexIndex x = 0; x < n; ++x) values[x] = comp[x] == c ? 1 : 0;
    out.basis.push_back(std::move(values));
    out.slope_basis.emplace_back(k, 0);
  }
  return out;
}

std::optional<NiceSequence> find_distinguishing_sequence(const QuiverMap& m, const SearchBudget& budget) {
  return extend_distinguishing_sequence(m, {}, budget);
}

std::optional<NiceSequence> extend_distinguishing_sequence(const QuiverMap& m, NiceSequence seq,
                                                          const SearchBudget& budget) {
  require_sequence(m, seq);
  while (!distinguishes(m, seq)) {
    if (seq.size() >= budget.max_length) return std::nullopt;
    auto values = pick_candidate(m, seq, budget);
    if (!values) return std::nullopt;
    seq.push_back(make_grading(m, *values));
  }
  return seq;
}

Grading vertex_label_grading(const QuiverMap& m) {
  const Quiver& base = m.codomain();
  for (const auto& a : base.arrows()) {
    if (a.source == a.target) throw Error(ErrorCode::kLoopPresent, "base arrow " + a.id + " is a loop");
  }
  std::vector<std::int64_t> v(m.domain().vertex_count());
  for (VertexIndex x = 0; x < v.size(); ++x) v[x] = static_cast<std::int64_t>(m.vertex_image(x)) + 1;
  return make_grading(m, v);
}

std::uint64_t grassmannian_point_count(const Winding& m, const DimensionVector& d) {
  const auto dim = dimension_vector(m);
  if (d.size() != dim.size()) throw Error(ErrorCode::kInvalidArgument, "dimension vector has wrong length");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > dim[i]) throw Error(ErrorCode::kInvalidArgument, "dimension vector exceeds the representation");
  }
  return closed_subsets(m, SubFlavor::kArrowTargetClosed, d).size();
}

EulerResult euler_characteristic(const Winding& m, const DimensionVector& d, const SearchBudget& budget) {
  EulerResult r;
  r.value = grassmannian_point_count(m, d);
  auto seq = find_distinguishing_sequence(m, budget);
  if (!seq) throw Error(ErrorCode::kNoCertificate, "no distinguishing nice sequence within budget");
  r.certified = true;
  r.certificate = std::move(*seq);
  return r;
}

}  // namespace f1q
