#include "f1q/catalog.hpp"

namespace f1q::catalog {

QuiverPtr make(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) {
  return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
}

QuiverPtr point() { return make({"o"}, {}); }

QuiverPtr loops(int count) {
  std::vector<ArrowSpec> arrows;
  for (int i = 1; i <= count; ++i) arrows.push_back({"a" + std::to_string(i), "o", "o"});
  return make({"o"}, std::move(arrows));
}

QuiverPtr loop_arrow_out() { return make({"o", "x"}, {{"a", "o", "o"}, {"b", "o", "x"}}); }
QuiverPtr loop_arrow_in() { return make({"o", "x"}, {{"a", "o", "o"}, {"b", "x", "o"}}); }
QuiverPtr a2() { return make({"1", "2"}, {{"a", "1", "2"}}); }
QuiverPtr kronecker() { return make({"a", "b"}, {{"alpha", "a", "b"}, {"beta", "a", "b"}}); }

QuiverPtr cycle(int n, bool equioriented) {
  std::vector<std::string> vs;
  std::vector<ArrowSpec> as;
  for (int i = 0; i < n; ++i) vs.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    std::string s = vs[i], t = vs[(i + 1) % n];
    // The acyclic variant reverses the closing arrow.
    if (!equioriented && i == n - 1) std::swap(s, t);
    as.push_back({"g" + std::to_string(i), s, t});
  }
  return make(std::move(vs), std::move(as));
}

QuiverPtr triangle_plus_leaf() {
  return make({"1", "2", "3", "4"},
              {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}, {"d", "3", "4"}});
}

QuiverPtr loop_two_leaves() {
  return make({"o", "x", "y"}, {{"a", "o", "o"}, {"b", "x", "o"}, {"c", "y", "o"}});
}

QuiverPtr spine_cycle_two_tails() {
  return make({"a", "b", "c", "d"},
              {{"p", "a", "b"}, {"q", "b", "c"}, {"r", "c", "b"}, {"s", "d", "c"}});
}

QuiverPtr spine_cycle_one_tail() {
  return make({"a", "b", "c"}, {{"p", "a", "b"}, {"q", "b", "c"}, {"r", "c", "b"}});
}

QuiverPtr four_betas() {
  return make({"1", "2", "3"}, {{"alpha", "1", "2"},
                                {"beta1", "2", "3"},
                                {"beta2", "2", "3"},
                                {"beta3", "2", "3"},
                                {"beta4", "2", "3"}});
}

QuiverPtr covering_base() {
  return make({"1", "2", "3", "4"},
              {{"a", "1", "3"}, {"b", "1", "2"}, {"c", "3", "2"}, {"d", "4", "2"}, {"e", "3", "4"}});
}

QuiverPtr doubled_beta() {
  return make({"1", "2", "3"}, {{"alpha", "1", "2"}, {"beta", "2", "3"}, {"gamma", "2", "3"}});
}

QuiverPtr nine_vertex() {
  return make({"P", "R", "S", "U", "V", "W", "X", "Y", "Z"},
              {{"8", "W", "P"},
               {"9", "P", "X"},
               {"7", "X", "W"},
               {"alpha", "X", "Y"},
               {"2", "R", "Z"},
               {"1", "Y", "R"},
               {"beta", "Y", "U"},
               {"3", "Z", "Y"},
               {"gamma", "U", "X"},
               {"6", "U", "S"},
               {"4", "V", "U"},
               {"5", "S", "V"}});
}

Winding four_betas_rep() {
  auto base = four_betas();
  Quiver total({"1", "2", "2'", "3", "3'"}, {{"a", "1", "2"},
                                            {"b1", "2", "3"},
                                            {"b4", "2", "3'"},
                                            {"b2", "2'", "3"},
                                            {"b3", "2'", "3'"}});
  return Winding(QuiverMap::from_ids(
      std::move(total), base, {{"1", "1"}, {"2", "2"}, {"2'", "2"}, {"3", "3"}, {"3'", "3"}},
      {{"a", "alpha"}, {"b1", "beta1"}, {"b2", "beta2"}, {"b3", "beta3"}, {"b4", "beta4"}}));
}

Winding two_loop_example() {
  auto base = loops(2);
  Quiver total({"1", "2", "3"}, {{"B1", "2", "1"}, {"R", "3", "1"}, {"B2", "3", "2"}});
  return Winding(QuiverMap::from_ids(std::move(total), base, {{"1", "o"}, {"2", "o"}, {"3", "o"}},
                                     {{"B1", "a1"}, {"B2", "a1"}, {"R", "a2"}}));
}

Winding square_over_loops() {
  auto base = make({"o"}, {{"alpha", "o", "o"}, {"beta", "o", "o"}});
  Quiver total({"p", "q", "r", "s"},
               {{"pq", "p", "q"}, {"pr", "p", "r"}, {"qs", "q", "s"}, {"rs", "r", "s"}});
  return Winding(QuiverMap::from_ids(std::move(total), base,
                                     {{"p", "o"}, {"q", "o"}, {"r", "o"}, {"s", "o"}},
                                     {{"pq", "alpha"}, {"rs", "alpha"}, {"pr", "beta"}, {"qs", "beta"}}));
}

Winding path_into_doubled() {
  auto base = doubled_beta();
  Quiver total({"1", "2", "3"}, {{"x", "1", "2"}, {"y", "2", "3"}});
  return Winding(QuiverMap::from_ids(std::move(total), base, {{"1", "1"}, {"2", "2"}, {"3", "3"}},
                                     {{"x", "alpha"}, {"y", "beta"}}));
}

Winding nine_vertex_cycle() {
  auto base = nine_vertex();
  // Colors along the directed cycle, starting at a vertex over X.
  const std::vector<std::string> colors = {"alpha", "1", "2", "3", "beta", "6", "5", "4", "gamma", "7", "8",
                                           "9",     "alpha", "1", "2", "3", "beta", "6", "5", "4", "gamma"};
  const std::size_t n = colors.size();
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("x" + std::string(i < 10 ? "0" : "") + std::to_string(i));
  std::vector<ArrowSpec> as;
  std::map<std::string, std::string> vmap, amap;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string id = "y" + std::string(i < 10 ? "0" : "") + std::to_string(i);
    as.push_back({id, vs[i], vs[(i + 1) % n]});
    amap[id] = colors[i];
    vmap[vs[i]] = base->vertex_id(base->arrow(base->arrow_index(colors[i])).source);
  }
  return Winding(QuiverMap::from_ids(Quiver(vs, as), base, vmap, amap));
}

}  // namespace f1q::catalog
