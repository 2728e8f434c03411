#include <doctest.h>

#include <random>

#include "comblab/enumerate.hpp"
#include "comblab/gadgets.hpp"
#include "comblab/graph.hpp"
#include "comblab/patterns.hpp"

using namespace comblab;

TEST_CASE("complement of small graphs") {
  Graph empty3(3);
  Graph k3 = complement(empty3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 1));
  CHECK(k3.adjacent(1, 2));
  CHECK(k3.adjacent(0, 2));

  Graph c4 = patterns::c4();
  Graph cc = complement(c4);
  CHECK(cc.edge_count() == 2);
  CHECK(cc.adjacent(0, 2));
  CHECK(cc.adjacent(1, 3));
}

TEST_CASE("complement is an involution") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 1000; ++it) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, rng);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("induced subgraph relabels in index order") {
  Graph p4 = patterns::path(4);
  auto [p3, map3] = induced_subgraph(p4, VertexSet::of(4, {0, 1, 2}));
  CHECK(p3 == patterns::path(3));
  CHECK(map3 == std::vector<int>{0, 1, 2});

  auto [same, mapid] = induced_subgraph(p4, VertexSet::full(4));
  CHECK(same == p4);

  // every 4-subset of C5 induces a P4 (up to isomorphism: a path has
  // degree sequence 1,1,2,2 and 3 edges)
  Graph c5 = patterns::c5();
  for (int drop = 0; drop < 5; ++drop) {
    VertexSet s = VertexSet::full(5);
    s.reset(drop);
    Graph sub = induced_subgraph(c5, s).first;
    CHECK(sub.edge_count() == 3);
    int deg1 = 0;
    for (int v = 0; v < 4; ++v) deg1 += sub.degree(v) == 1;
    CHECK(deg1 == 2);
  }
}

TEST_CASE("induced subgraph rejects out-of-range sets") {
  Graph g(3);
  CHECK_THROWS(VertexSet::of(3, {5}));
}

TEST_CASE("second out-neighborhood") {
  OrientedGraph cyc(3);
  cyc.add_arc(0, 1);
  cyc.add_arc(1, 2);
  cyc.add_arc(2, 0);
  CHECK(second_out_neighbors(cyc, 0) == VertexSet::of(3, {2}));

  CHECK(second_out_neighbors(gadgets::c4_complement_gadget(), 0) == VertexSet::of(4, {1}));

  OrientedGraph sink(3);
  sink.add_arc(0, 2);
  CHECK(second_out_neighbors(sink, 2).count() == 0);
}

TEST_CASE("second out-neighborhood excludes v and its out-neighbors") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    OrientedGraph d = random_oriented(n, rng);
    for (int v = 0; v < n; ++v) {
      VertexSet s = second_out_neighbors(d, v);
      CHECK(!s.test(v));
      CHECK(!s.intersects(d.out_neighbors(v)));
    }
  }
}

TEST_CASE("second neighborhood property checks") {
  OrientedGraph tt(3);
  tt.add_arc(0, 1);
  tt.add_arc(0, 2);
  tt.add_arc(1, 2);
  CHECK(!has_snp(tt, 0));  // d+ = 2, d++ = 0
  CHECK(has_snp(tt, 2));   // sink

  OrientedGraph cyc(3);
  cyc.add_arc(0, 1);
  cyc.add_arc(1, 2);
  cyc.add_arc(2, 0);
  for (int v = 0; v < 3; ++v) CHECK(has_snp(cyc, v));
}

TEST_CASE("snp witness set") {
  OrientedGraph one(1);
  CHECK(snp_witnesses(one) == VertexSet::of(1, {0}));

  std::mt19937_64 rng(3);
  for (int it = 0; it < 50; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    // transitive tournament: sink always a witness
    OrientedGraph d(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
    CHECK(snp_witnesses(d).test(n - 1));
  }
}

TEST_CASE("missing graph and whole vertices") {
  std::mt19937_64 rng(5);
  OrientedGraph t = random_tournament(5, rng);
  auto [mg, whole] = missing_graph(t);
  CHECK(mg.edge_count() == 0);
  CHECK(whole == VertexSet::full(5));

  auto [mg2, whole2] = missing_graph(gadgets::c4_complement_gadget());
  CHECK(mg2 == patterns::two_k2());
  CHECK(whole2.count() == 0);

  auto [mg3, whole3] = missing_graph(gadgets::chair_gadget());
  Graph chair5(5);
  chair5.add_edge(0, 1);
  chair5.add_edge(1, 3);
  chair5.add_edge(2, 3);
  chair5.add_edge(3, 4);
  CHECK(mg3 == chair5);
  CHECK(whole3.count() == 0);
}

TEST_CASE("missing graph of a complement orientation recovers the graph") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, rng);
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
    if (isolated) continue;
    OrientedGraph d = random_orientation_of_complement(g, rng);
    CHECK(missing_graph(d).first == g);
  }
}

TEST_CASE("oriented graph rejects loops and digons") {
  OrientedGraph d(3);
  d.add_arc(0, 1);
  CHECK_THROWS(d.add_arc(1, 0));
  CHECK_THROWS(d.add_arc(2, 2));
}
