#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "comblab/bitset.hpp"

namespace comblab {

/// Simple undirected graph on vertices 0..n-1, one adjacency bitset per row.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

  int size() const { return n_; }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  std::vector<std::pair<int, int>> edges() const;

  bool is_clique(const VertexSet& s) const;
  bool is_stable(const VertexSet& s) const;

  bool operator==(const Graph& o) const = default;

private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Oriented graph: digraph with no loops and no digons. One out-row per vertex.
class OrientedGraph {
public:
  OrientedGraph() = default;
  explicit OrientedGraph(int n) : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

  int size() const { return n_; }
  int arc_count() const;

  void add_arc(int u, int v);
  void remove_arc(int u, int v);
  bool has_arc(int u, int v) const { return out_[u].test(v); }

  const VertexSet& out_neighbors(int v) const { return out_[v]; }
  const VertexSet& in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return out_[v].count(); }
  int in_degree(int v) const { return in_[v].count(); }

  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const OrientedGraph& o) const = default;

private:
  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Unordered non-adjacent pair, stored as (min,max).
struct MissingEdge {
  int a, b;
  MissingEdge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
  bool operator==(const MissingEdge&) const = default;
  auto operator<=>(const MissingEdge&) const = default;
  int other(int v) const { return v == a ? b : a; }
  bool contains(int v) const { return v == a || v == b; }
};

Graph complement(const Graph& g);

/// Induced subgraph with vertices relabeled 0..|s|-1 in index order.
/// Second component maps new index -> original vertex.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);
std::pair<OrientedGraph, std::vector<int>> induced_subgraph(const OrientedGraph& d,
                                                            const VertexSet& s);

/// { w : w not in N+(v), w != v, some u in N+(v) has u->w }.
VertexSet second_out_neighbors(const OrientedGraph& d, int v);

bool has_snp(const OrientedGraph& d, int v);

/// Exact set of SNP vertices (brute force).
VertexSet snp_witnesses(const OrientedGraph& d);

/// Graph on all n indices whose edges are the non-adjacent pairs of d,
/// plus the set of whole vertices (no incident missing edge).
std::pair<Graph, VertexSet> missing_graph(const OrientedGraph& d);

std::vector<MissingEdge> missing_edges(const OrientedGraph& d);

}  // namespace comblab
