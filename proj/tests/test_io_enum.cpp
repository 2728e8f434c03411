#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "comblab/dependency.hpp"
#include "comblab/enumerate.hpp"
#include "comblab/gadgets.hpp"
#include "comblab/io.hpp"
#include "comblab/patterns.hpp"

using namespace comblab;

namespace {

std::vector<std::pair<int, int>> sorted_arcs(const OrientedGraph& d) {
  auto a = d.arcs();
  std::sort(a.begin(), a.end());
  return a;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("parsing graphs and digraphs") {
  Graph g = parse_graph("graph 4\n0 1\n1 2\n2 3\n");
  CHECK(g == patterns::path(4));

  OrientedGraph d = parse_oriented("digraph 4\n0 2\n1 3\n3 0\n");
  CHECK(sorted_arcs(d) == sorted_arcs(gadgets::ex_p4()));

  CHECK_THROWS_AS(parse_graph("graf 4\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("graph 4\n0 9\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("graph 4\n0 1\n1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("graph 4\n2 2\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("graph 4\n0 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_oriented("digraph 3\n0 1\n1 0\n"), parse_error);
  CHECK_THROWS_AS(parse_oriented("graph 3\n"), parse_error);
}

TEST_CASE("serialize round-trips") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng);
    CHECK(parse_graph(serialize(g)) == g);
    OrientedGraph d = random_oriented(n, rng);
    CHECK(sorted_arcs(parse_oriented(serialize(d))) == sorted_arcs(d));
  }
}

TEST_CASE("loading from files") {
  auto gp = write_temp("comblab_test_g.txt", "graph 4\n0 1\n1 2\n2 3\n");
  CHECK(load_graph(gp.string()) == patterns::path(4));

  auto dp = write_temp("comblab_test_d.txt", serialize(gadgets::ex_p4()));
  CHECK(sorted_arcs(load_oriented(dp.string())) == sorted_arcs(gadgets::ex_p4()));

  AnyGraph ag = load_any(gp.string());
  CHECK(!ag.oriented);
  CHECK(ag.graph == patterns::path(4));
  AnyGraph ad = load_any(dp.string());
  CHECK(ad.oriented);

  CHECK_THROWS(load_graph("/nonexistent/comblab.txt"));
  std::filesystem::remove(gp);
  std::filesystem::remove(dp);
}

TEST_CASE("labeled and unlabeled counts") {
  CHECK(labeled_graph_count(1) == 1);
  CHECK(labeled_graph_count(3) == 8);
  CHECK(labeled_graph_count(4) == 64);
  CHECK_THROWS(labeled_graph_count(12));
  CHECK(nonisomorphic_graphs(4).size() == 11);
}

TEST_CASE("complement pairs and orientation masks") {
  Graph p4 = patterns::path(4);
  std::vector<std::pair<int, int>> want{{0, 2}, {0, 3}, {1, 3}};
  CHECK(complement_pairs(p4) == want);

  bool found = false;
  for (uint64_t mask = 0; mask < 8; ++mask)
    found |= sorted_arcs(orientation_from_mask(p4, mask)) == sorted_arcs(gadgets::ex_p4());
  CHECK(found);

  Graph k4 = complement(Graph(4));
  CHECK(complement_pairs(k4).empty());
  CHECK(orientation_from_mask(k4, 0).arcs().empty());
}

TEST_CASE("canonical form is relabeling-invariant") {
  std::mt19937_64 rng(59);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(n, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("closure gadget on a single missing edge") {
  Graph k2(2);
  k2.add_edge(0, 1);
  OrientedGraph d_prime(1);
  OrientedGraph d = induced_closure_gadget(d_prime, k2, 1);
  CHECK(d.size() == 4);
  CHECK(missing_graph(d).first.adjacent(0, 1));
  DependencyDigraph delta = dependency_digraph(d);
  REQUIRE(delta.nodes.size() == 1);
  CHECK(delta.arcs.empty());
}

TEST_CASE("closure gadget preserves dependency arcs") {
  Graph g(5);  // path 0-1-2-3 with a pendant at 3
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  OrientedGraph d = induced_closure_gadget(gadgets::ex_p4(), g, 4);
  DependencyDigraph before = dependency_digraph(gadgets::ex_p4());
  DependencyDigraph after = dependency_digraph(d);
  CHECK(after.arcs.size() == before.arcs.size());
  int i01 = after.node_index({0, 1});
  int i23 = after.node_index({2, 3});
  REQUIRE(i01 >= 0);
  REQUIRE(i23 >= 0);
  REQUIRE(after.arcs.size() == 1);
  CHECK(after.arcs[0] == std::pair<int, int>{i01, i23});
  int i34 = after.node_index({3, 4});
  REQUIRE(i34 >= 0);
  CHECK(after.out_degree(i34) == 0);
  CHECK(after.in_degree(i34) == 0);
}

TEST_CASE("closure gadget input validation") {
  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK_THROWS(induced_closure_gadget(OrientedGraph(2), k2, 1));
  CHECK_THROWS(induced_closure_gadget(OrientedGraph(1), k2, 5));
  Graph p3 = patterns::path(3);
  OrientedGraph wrong(2);
  wrong.add_arc(0, 1);  // g - 2 = P2 has {0,1} present, so nothing is missing
  CHECK_THROWS(induced_closure_gadget(wrong, p3, 2));
}

TEST_CASE("random combs are combs") {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 300; ++it) {
    Graph g = random_comb(8, rng);
    CHECK(g.size() >= 2);
    CHECK(g.size() <= 8);
    CHECK(forbidden_free(g, PatternFamily::Comb));
    for (int v = 0; v < g.size(); ++v) CHECK(g.degree(v) > 0);
  }
}
