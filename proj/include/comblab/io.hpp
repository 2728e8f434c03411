#pragma once

#include <stdexcept>
#include <string>

#include "comblab/graph.hpp"

namespace comblab {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "graph <n>" header, then one "<u> <v>" edge per line.
Graph parse_graph(const std::string& text);
/// "digraph <n>" header, then one "<u> <v>" arc per line; digons rejected.
OrientedGraph parse_oriented(const std::string& text);

std::string serialize(const Graph& g);
std::string serialize(const OrientedGraph& d);

Graph load_graph(const std::string& path);
OrientedGraph load_oriented(const std::string& path);

/// Either kind, decided by the header line.
struct AnyGraph {
  bool oriented = false;
  Graph graph;
  OrientedGraph digraph;
};
AnyGraph load_any(const std::string& path);

}  // namespace comblab
