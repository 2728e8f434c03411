#include "comblab/dependency.hpp"

#include <algorithm>
#include <stdexcept>

namespace comblab {

int DependencyDigraph::node_index(const MissingEdge& e) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
  if (it == nodes.end() || !(*it == e)) return -1;
  return static_cast<int>(it - nodes.begin());
}

namespace {

void require_missing(const OrientedGraph& d, const MissingEdge& e) {
  if (e.a == e.b) throw std::invalid_argument("degenerate edge");
  if (d.has_arc(e.a, e.b) || d.has_arc(e.b, e.a))
    throw std::invalid_argument("edge is not missing");
}

bool loses_labeled(const OrientedGraph& d, int x1, int y1, int x2, int y2) {
  if (!d.has_arc(x1, x2) || !d.has_arc(y1, y2)) return false;
  VertexSet reach_x1 = d.out_neighbors(x1) | second_out_neighbors(d, x1);
  if (reach_x1.test(y2)) return false;
  VertexSet reach_y1 = d.out_neighbors(y1) | second_out_neighbors(d, y1);
  if (reach_y1.test(x2)) return false;
  return true;
}

}  // namespace

bool loses_to(const OrientedGraph& d, const MissingEdge& e1, const MissingEdge& e2) {
  if (e1 == e2) throw std::invalid_argument("losing relation needs distinct edges");
  require_missing(d, e1);
  require_missing(d, e2);
  return loses_labeled(d, e1.a, e1.b, e2.a, e2.b) || loses_labeled(d, e1.a, e1.b, e2.b, e2.a) ||
         loses_labeled(d, e1.b, e1.a, e2.a, e2.b) || loses_labeled(d, e1.b, e1.a, e2.b, e2.a);
}

DependencyDigraph dependency_digraph(const OrientedGraph& d) {
  DependencyDigraph delta;
  delta.nodes = missing_edges(d);  // already in canonical sorted order
  size_t k = delta.nodes.size();
  delta.out_adj.resize(k);
  delta.in_adj.resize(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (loses_to(d, delta.nodes[i], delta.nodes[j])) {
        delta.arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        delta.out_adj[i].push_back(static_cast<int>(j));
        delta.in_adj[j].push_back(static_cast<int>(i));
      }
    }
  return delta;
}

ConvenientOrientations convenient_orientations(const OrientedGraph& d, const MissingEdge& e) {
  require_missing(d, e);
  ConvenientOrientations res{e};
  auto convenient = [&](int a, int b) {
    // every in-neighbor of a must reach b within two steps
    bool ok = true;
    d.in_neighbors(a).for_each([&](int v) {
      if (v == b) return;  // b cannot point at a: edge is missing
      if (!d.out_neighbors(v).test(b) && !second_out_neighbors(d, v).test(b)) ok = false;
    });
    return ok;
  };
  res.forward = convenient(e.a, e.b);
  res.backward = convenient(e.b, e.a);
  return res;
}

bool is_disjoint_paths(const DependencyDigraph& delta) {
  size_t k = delta.nodes.size();
  for (size_t i = 0; i < k; ++i)
    if (delta.out_adj[i].size() > 1 || delta.in_adj[i].size() > 1) return false;
  // functional graph with degrees <= 1: a cycle shows up as a node never
  // reached from any in-degree-0 start; walk and mark instead
  std::vector<bool> seen(k, false);
  for (size_t i = 0; i < k; ++i) {
    if (!delta.in_adj[i].empty()) continue;
    int cur = static_cast<int>(i);
    while (true) {
      seen[cur] = true;
      if (delta.out_adj[cur].empty()) break;
      cur = delta.out_adj[cur][0];
    }
  }
  for (size_t i = 0; i < k; ++i)
    if (!seen[i]) return false;  // lies on a directed cycle
  return true;
}

std::vector<std::vector<int>> maximal_paths(const DependencyDigraph& delta) {
  if (!is_disjoint_paths(delta))
    throw std::invalid_argument("dependency digraph is not a disjoint union of paths");
  std::vector<std::vector<int>> paths;
  size_t k = delta.nodes.size();
  for (size_t i = 0; i < k; ++i) {
    if (!delta.in_adj[i].empty()) continue;
    std::vector<int> p;
    int cur = static_cast<int>(i);
    while (true) {
      p.push_back(cur);
      if (delta.out_adj[cur].empty()) break;
      cur = delta.out_adj[cur][0];
    }
    paths.push_back(std::move(p));
  }
  return paths;  // ordered by head index = canonical first node
}

}  // namespace comblab
