#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "comblab/graph.hpp"

namespace comblab {

/// Digraph on the missing edges of a host oriented graph; arcs are losing
/// relations. Digons are allowed here.
struct DependencyDigraph {
  std::vector<MissingEdge> nodes;               // canonical (min,max), sorted
  std::vector<std::pair<int, int>> arcs;        // indices into nodes
  std::vector<std::vector<int>> out_adj;        // per node
  std::vector<std::vector<int>> in_adj;

  int node_index(const MissingEdge& e) const;   // -1 if absent
  int out_degree(int i) const { return static_cast<int>(out_adj[i].size()); }
  int in_degree(int i) const { return static_cast<int>(in_adj[i].size()); }
};

/// Allowed orientations of a missing edge; nonempty iff the edge is good.
struct ConvenientOrientations {
  MissingEdge edge;
  bool forward = false;   // (a,b) with a < b
  bool backward = false;  // (b,a)
  bool good() const { return forward || backward; }
};

/// True iff some labeling e1={x1,y1}, e2={x2,y2} has x1->x2, y1->y2,
/// y2 not within two steps of x1, x2 not within two steps of y1.
bool loses_to(const OrientedGraph& d, const MissingEdge& e1, const MissingEdge& e2);

DependencyDigraph dependency_digraph(const OrientedGraph& d);

ConvenientOrientations convenient_orientations(const OrientedGraph& d, const MissingEdge& e);

/// Out-degree <= 1, in-degree <= 1, acyclic.
bool is_disjoint_paths(const DependencyDigraph& delta);

/// Partition of the nodes into maximal directed paths (node index sequences),
/// ordered by first node. Requires is_disjoint_paths.
std::vector<std::vector<int>> maximal_paths(const DependencyDigraph& delta);

}  // namespace comblab
