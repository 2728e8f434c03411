#include "comblab/io.hpp"

#include <fstream>
#include <sstream>

namespace comblab {

namespace {

struct Header {
  std::string kind;
  int n = 0;
};

Header parse_header(std::istringstream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Header h;
    std::string extra;
    if (!(ls >> h.kind >> h.n) || (ls >> extra) || h.n < 0)
      throw parse_error("malformed header: " + line);
    return h;
  }
  throw parse_error("missing header line");
}

template <class AddPair>
void parse_pairs(std::istringstream& in, int n, AddPair&& add) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw parse_error("malformed line: " + line);
    if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error("vertex out of range: " + line);
    if (u == v) throw parse_error("loop: " + line);
    add(u, v);
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  Header h = parse_header(in);
  if (h.kind != "graph") throw parse_error("expected 'graph' header, got '" + h.kind + "'");
  Graph g(h.n);
  parse_pairs(in, h.n, [&](int u, int v) {
    if (g.adjacent(u, v)) throw parse_error("duplicate edge");
    g.add_edge(u, v);
  });
  return g;
}

OrientedGraph parse_oriented(const std::string& text) {
  std::istringstream in(text);
  Header h = parse_header(in);
  if (h.kind != "digraph") throw parse_error("expected 'digraph' header, got '" + h.kind + "'");
  OrientedGraph d(h.n);
  parse_pairs(in, h.n, [&](int u, int v) {
    if (d.has_arc(u, v)) throw parse_error("duplicate arc");
    if (d.has_arc(v, u)) throw parse_error("digon");
    d.add_arc(u, v);
  });
  return d;
}

std::string serialize(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.size() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

std::string serialize(const OrientedGraph& d) {
  std::ostringstream os;
  os << "digraph " << d.size() << "\n";
  for (auto [u, v] : d.arcs()) os << u << " " << v << "\n";
  return os.str();
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw parse_error("cannot open file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

Graph load_graph(const std::string& path) { return parse_graph(slurp(path)); }

OrientedGraph load_oriented(const std::string& path) { return parse_oriented(slurp(path)); }

AnyGraph load_any(const std::string& path) {
  std::string text = slurp(path);
  std::istringstream probe(text);
  std::string kind;
  probe >> kind;
  AnyGraph out;
  if (kind == "graph") {
    out.graph = parse_graph(text);
  } else if (kind == "digraph") {
    out.oriented = true;
    out.digraph = parse_oriented(text);
  } else {
    throw parse_error("unknown header kind: " + kind);
  }
  return out;
}

}  // namespace comblab
