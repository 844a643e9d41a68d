#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "f1q/gradings.hpp"
#include "f1q/quiver.hpp"

namespace f1q {

struct CoveringReport {
  bool is_quiver_map = false;
  bool is_surjective = false;
  std::vector<bool> local_out_bijective;  // by domain vertex
  std::vector<bool> local_in_bijective;
  bool strict = false;
  std::vector<std::string> boundary_vertices;  // where a local bijection fails
};

CoveringReport covering_report(const QuiverMap& m);
// A strict covering is always a winding; true when m is not strict.
bool check_covering_implies_winding(const QuiverMap& m);

struct GammaEConfig {
  std::shared_ptr<const Quiver> base;
  std::string e;
  std::size_t copies = 1;
  // 1-based label per base vertex index; empty means sorted order.
  std::vector<std::int64_t> labeling;
};

// Copies of base minus e, vertex "v@k" in copy k, chained by e-colored
// arrows "e@k" from s(e)@k to t(e)@(k+1).
Winding build_gamma_e(const GammaEConfig& cfg);
Grading gamma_e_grading(const Winding& w, const GammaEConfig& cfg);

// Subquiver spanned by the arrows over A, with their endpoints.
Winding restrict_to_arrows(const Winding& w, const std::set<std::string>& a);

struct Contraction {
  QuiverMap map;  // Gamma / c^-1(A) -> Q / A
  bool is_winding = false;
  std::vector<VertexIndex> vertex_class;  // Gamma vertex -> quotient vertex
};
// Merged vertices are named by their smallest member.
Contraction contract(const Winding& w, const std::set<std::string>& a);

// Combines a distinguishing sequence of the contraction with one of the
// restriction into a distinguishing sequence of w. Throws kPreconditionFailed
// when the inputs do not qualify.
NiceSequence lift_nice_sequence(const Winding& w, const std::set<std::string>& a, const NiceSequence& seq_quotient,
                                const NiceSequence& seq_restricted, const SearchBudget& budget = {});

}  // namespace f1q
