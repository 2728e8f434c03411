#include "comblab/graph.hpp"

#include <stdexcept>

namespace comblab {

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self loop");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u].reset(v);
  adj_[v].reset(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](int u) {
    s.for_each([&](int v) {
      if (u < v && !adjacent(u, v)) ok = false;
    });
  });
  return ok;
}

bool Graph::is_stable(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](int u) {
    if (neighbors(u).intersects(s)) ok = false;
  });
  return ok;
}

int OrientedGraph::arc_count() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += out_degree(v);
  return s;
}

void OrientedGraph::add_arc(int u, int v) {
  if (u == v) throw std::invalid_argument("loop");
  if (out_[v].test(u)) throw std::invalid_argument("digon");
  out_[u].set(v);
  in_[v].set(u);
}

void OrientedGraph::remove_arc(int u, int v) {
  out_[u].reset(v);
  in_[v].reset(u);
}

std::vector<std::pair<int, int>> OrientedGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    out_[u].for_each([&](int v) { out.emplace_back(u, v); });
  return out;
}

Graph complement(const Graph& g) {
  int n = g.size();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.size()) throw std::invalid_argument("vertex set universe mismatch");
  std::vector<int> map = s.to_vector();
  Graph h(static_cast<int>(map.size()));
  for (size_t i = 0; i < map.size(); ++i)
    for (size_t j = i + 1; j < map.size(); ++j)
      if (g.adjacent(map[i], map[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(h), std::move(map)};
}

std::pair<OrientedGraph, std::vector<int>> induced_subgraph(const OrientedGraph& d,
                                                            const VertexSet& s) {
  if (s.universe() != d.size()) throw std::invalid_argument("vertex set universe mismatch");
  std::vector<int> map = s.to_vector();
  OrientedGraph h(static_cast<int>(map.size()));
  for (size_t i = 0; i < map.size(); ++i)
    for (size_t j = 0; j < map.size(); ++j)
      if (i != j && d.has_arc(map[i], map[j]))
        h.add_arc(static_cast<int>(i), static_cast<int>(j));
  return {std::move(h), std::move(map)};
}

VertexSet second_out_neighbors(const OrientedGraph& d, int v) {
  VertexSet second(d.size());
  d.out_neighbors(v).for_each([&](int u) { second |= d.out_neighbors(u); });
  second -= d.out_neighbors(v);
  if (second.test(v)) second.reset(v);
  return second;
}

bool has_snp(const OrientedGraph& d, int v) {
  return d.out_degree(v) <= second_out_neighbors(d, v).count();
}

VertexSet snp_witnesses(const OrientedGraph& d) {
  VertexSet w(d.size());
  for (int v = 0; v < d.size(); ++v)
    if (has_snp(d, v)) w.set(v);
  return w;
}

std::pair<Graph, VertexSet> missing_graph(const OrientedGraph& d) {
  int n = d.size();
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) g.add_edge(u, v);
  VertexSet whole(n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) whole.set(v);
  return {std::move(g), std::move(whole)};
}

std::vector<MissingEdge> missing_edges(const OrientedGraph& d) {
  std::vector<MissingEdge> out;
  for (int u = 0; u < d.size(); ++u)
    for (int v = u + 1; v < d.size(); ++v)
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) out.emplace_back(u, v);
  return out;
}

}  // namespace comblab
