#include "comblab/gadgets.hpp"

#include <stdexcept>

#include "comblab/dependency.hpp"
#include "comblab/enumerate.hpp"
#include "comblab/patterns.hpp"

namespace comblab {
namespace gadgets {

namespace {

OrientedGraph from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs) {
  OrientedGraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

}  // namespace

OrientedGraph c4_complement_gadget() {
  return from_arcs(4, {{0, 2}, {1, 3}, {3, 0}, {2, 1}});
}

OrientedGraph chair_gadget() {
  return from_arcs(5, {{0, 3}, {1, 2}, {2, 0}, {1, 4}, {4, 0}, {4, 2}});
}

uint64_t derive_co_chair_gadget_mask() {
  Graph cochair = patterns::co_chair();
  uint64_t count = uint64_t{1} << complement_pairs(cochair).size();
  for (uint64_t mask = 0; mask < count; ++mask) {
    OrientedGraph d = orientation_from_mask(cochair, mask);
    if (!is_disjoint_paths(dependency_digraph(d))) return mask;
  }
  throw std::logic_error("no co-chair gadget found");
}

OrientedGraph co_chair_gadget() {
  // frozen result of derive_co_chair_gadget_mask(): arcs 0->1->2 and 2->3,
  // 2->4, making missing edge {0,2} lose to both {1,3} and {1,4}
  return orientation_from_mask(patterns::co_chair(), 0);
}

OrientedGraph ex_p4() {
  return from_arcs(4, {{0, 2}, {1, 3}, {3, 0}});
}

}  // namespace gadgets

OrientedGraph induced_closure_gadget(const OrientedGraph& d_prime, const Graph& g, int v) {
  int k = g.size() - 1;
  if (v < 0 || v >= g.size()) throw std::invalid_argument("v outside g");
  if (d_prime.size() != k) throw std::invalid_argument("d_prime must have g.size()-1 vertices");
  // d_prime must actually be missing g - v
  auto [mg, whole] = missing_graph(d_prime);
  VertexSet rest = VertexSet::full(g.size());
  rest.reset(v);
  Graph g_minus_v = induced_subgraph(g, rest).first;
  if (!(mg == g_minus_v)) throw std::invalid_argument("d_prime is not missing g - v");

  auto g_label = [&](int i) { return i < v ? i : i + 1; };
  int vv = k, alpha = k + 1, beta = k + 2;
  OrientedGraph d(k + 3);
  for (auto [u, w] : d_prime.arcs()) d.add_arc(u, w);
  d.add_arc(alpha, vv);
  d.add_arc(vv, beta);
  d.add_arc(alpha, beta);
  for (int x = 0; x < k; ++x) {
    if (!g.adjacent(g_label(x), v)) d.add_arc(x, vv);
    d.add_arc(x, alpha);
    d.add_arc(beta, x);
  }
  return d;
}

}  // namespace comblab
