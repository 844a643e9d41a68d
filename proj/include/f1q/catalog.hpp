#pragma once

#include <memory>
#include <string>
#include <vector>

#include "f1q/quiver.hpp"

// Small named quivers and windings used by tests, the CLI and examples.
namespace f1q::catalog {

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr make(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

QuiverPtr point();          // one vertex "o"
QuiverPtr loops(int count);  // vertex "o", loops "a1".."a<count>"
QuiverPtr loop_arrow_out();  // loop "a" at "o", arrow "b": o -> x
QuiverPtr loop_arrow_in();   // loop "a" at "o", arrow "b": x -> o
QuiverPtr a2();              // "a": 1 -> 2
QuiverPtr kronecker();       // "alpha", "beta": a -> b
QuiverPtr cycle(int n, bool equioriented);  // vertices c0.., arrows g0..
QuiverPtr triangle_plus_leaf();  // acyclic triangle 1->2->3, 1->3 with leaf 3 -> 4
QuiverPtr loop_two_leaves();     // loop at "o", arrows x -> o, y -> o
QuiverPtr spine_cycle_two_tails();  // a -> b <-> c <- d
QuiverPtr spine_cycle_one_tail();   // a -> b <-> c
QuiverPtr four_betas();             // 1 -alpha-> 2 with beta1..beta4: 2 -> 3
QuiverPtr covering_base();          // vertices 1..4, arrow "e": 3 -> 4
QuiverPtr doubled_beta();           // 1 -alpha-> 2, beta and gamma: 2 -> 3
QuiverPtr nine_vertex();            // base of the contraction counterexample

// Windings.
Winding four_betas_rep();     // five vertices, a pseudotree over four_betas()
Winding two_loop_example();   // three vertices over loops(2)
Winding square_over_loops();  // commuting square over loops "alpha", "beta"
Winding path_into_doubled();  // 1 -alpha-> 2 -beta-> 3 over doubled_beta()
Winding nine_vertex_cycle();  // directed 21-cycle over nine_vertex()

}  // namespace f1q::catalog
