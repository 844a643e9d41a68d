#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "f1q/quiver.hpp"
#include "f1q/representation.hpp"

namespace f1q {

// Integer value per total-quiver vertex id.
using Grading = std::map<std::string, std::int64_t>;
using NiceSequence = std::vector<Grading>;

// Values by vertex index; throws kPartialGrading when a vertex is missing.
std::vector<std::int64_t> grading_values(const QuiverMap& m, const Grading& g);
Grading make_grading(const QuiverMap& m, std::span<const std::int64_t> values);

bool is_nice(const QuiverMap& m, const Grading& g);
bool is_nondegenerate(const QuiverMap& m, const Grading& g);  // throws kNotNice
bool is_nice_sequence(const QuiverMap& m, const NiceSequence& seq);
// Slopes must agree on same-colored arrows whose endpoints agree under seq.
bool is_relative_nice(const QuiverMap& m, const NiceSequence& seq, const Grading& g);
bool distinguishes(const QuiverMap& m, const NiceSequence& seq);
bool frees(const QuiverMap& m, const NiceSequence& seq, std::string_view arrow_id);

// Arrow classes still forced to share a slope after seq: same color and
// same endpoint profiles. Class ids follow first occurrence.
std::vector<std::size_t> arrow_partition(const QuiverMap& m, const NiceSequence& seq);

// Every integer grading with one slope per class is an integer combination
// of `basis`. Slope-carrying generators come first, then one constant
// generator per weak component.
struct GradingLattice {
  std::vector<std::size_t> arrow_class;
  std::size_t class_count = 0;
  std::vector<std::vector<std::int64_t>> basis;        // vertex values
  std::vector<std::vector<std::int64_t>> slope_basis;  // slope per class
  std::size_t dimension() const { return basis.size(); }
  std::vector<std::int64_t> combine(std::span<const std::int64_t> coeffs) const;
};

GradingLattice solve_nice_lattice(const QuiverMap& m, std::span<const std::size_t> partition);

struct SearchBudget {
  std::size_t max_length = 16;
  std::int64_t max_coefficient = 3;
  std::size_t max_candidates = 200'000;  // per stage
};

// Greedy: at each stage take the first candidate that separates every
// vertex, else the first that splits some profile class. nullopt means the
// budget ran out, not that no sequence exists.
std::optional<NiceSequence> find_distinguishing_sequence(const QuiverMap& m, const SearchBudget& budget = {});
std::optional<NiceSequence> extend_distinguishing_sequence(const QuiverMap& m, NiceSequence seq,
                                                          const SearchBudget& budget = {});

// Grades each vertex by the 1-based index of the base vertex below it.
Grading vertex_label_grading(const QuiverMap& m);  // throws kLoopPresent

struct EulerResult {
  std::uint64_t value = 0;
  bool certified = false;
  NiceSequence certificate;
};

// Number of arrow-target-closed subsets with dimension vector d.
std::uint64_t grassmannian_point_count(const Winding& m, const DimensionVector& d);
// Same count, certified by a distinguishing nice sequence; throws
// kNoCertificate when the search fails.
EulerResult euler_characteristic(const Winding& m, const DimensionVector& d, const SearchBudget& budget = {});

}  // namespace f1q
