#include <doctest.h>

#include <random>

#include "comblab/enumerate.hpp"
#include "comblab/patterns.hpp"
#include "comblab/recognition.hpp"

using namespace comblab;

TEST_CASE("threshold elimination") {
  CHECK(is_threshold(Graph(4)));
  CHECK(!is_threshold(patterns::p4()));
  for (int n = 1; n <= 5; ++n)
    for (uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
      Graph g = graph_from_mask(n, mask);
      CHECK(is_threshold(g) == forbidden_free(g, PatternFamily::Threshold));
    }
}

TEST_CASE("split partitions") {
  Graph k3 = complement(Graph(3));
  auto sp = split_partition(k3);
  REQUIRE(sp.has_value());
  CHECK(sp->stable.count() == 0);
  CHECK(sp->clique == VertexSet::full(3));

  CHECK(!split_partition(patterns::two_k2()).has_value());

  // every comb is split
  for (uint64_t mask = 0; mask < labeled_graph_count(5); ++mask) {
    Graph g = graph_from_mask(5, mask);
    if (forbidden_free(g, PatternFamily::Comb)) CHECK(split_partition(g).has_value());
  }
}

TEST_CASE("path decomposition blocks") {
  auto dec = find_comb_decomposition(patterns::p4());
  REQUIRE(dec.has_value());
  CHECK(dec->levels() == 1);
  CHECK(dec->k0 == 0);
  CHECK(dec->M[0] == VertexSet::of(4, {0, 3}));
  CHECK(dec->Y[0] == VertexSet::of(4, {1, 2}));
  CHECK(dec->Y[1].count() == 0);
  CHECK(dec->Y[2].count() == 0);
  std::vector<std::pair<int, int>> want{{0, 1}, {3, 2}};
  CHECK(dec->matching == want);
  CHECK(validate_comb_decomposition(patterns::p4(), *dec).ok());
}

TEST_CASE("non-combs have no decomposition") {
  CHECK(!find_comb_decomposition(patterns::c4()).has_value());
  CHECK(!find_comb_decomposition(patterns::c5()).has_value());
}

TEST_CASE("star decomposition is the threshold shape") {
  Graph star(5);  // K_{1,4}, center 0
  for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  auto dec = find_comb_decomposition(star);
  REQUIRE(dec.has_value());
  CHECK(dec->levels() == 0);
  CHECK(dec->Y[0] == VertexSet::of(5, {0}));
  CHECK(dec->A.size() == 1);
  CHECK(dec->A[0] == VertexSet::of(5, {1, 2, 3, 4}));
  CHECK(validate_comb_decomposition(star, *dec).ok());
}

TEST_CASE("matched triangle decomposes as one level") {
  // triangle with a pendant on each corner; the pendants are the matched side
  Graph net(6);
  net.add_edge(3, 4);
  net.add_edge(3, 5);
  net.add_edge(4, 5);
  net.add_edge(0, 3);
  net.add_edge(1, 4);
  net.add_edge(2, 5);
  auto dec = find_comb_decomposition(net);
  REQUIRE(dec.has_value());
  CHECK(dec->levels() == 1);
  CHECK(dec->M[0] == VertexSet::of(6, {0, 1, 2}));
  CHECK(dec->Y[0] == VertexSet::of(6, {3, 4, 5}));
  CHECK(validate_comb_decomposition(net, *dec).ok());
}

TEST_CASE("isolated vertices are stripped and reported") {
  Graph g(3);
  g.add_edge(0, 1);
  auto dec = find_comb_decomposition(g);
  REQUIRE(dec.has_value());
  CHECK(dec->stripped == VertexSet::of(3, {2}));
}

TEST_CASE("validator flags broken decompositions") {
  Graph p4 = patterns::p4();
  auto good = find_comb_decomposition(p4);
  REQUIRE(good.has_value());

  CombDecomposition crossed = *good;
  crossed.matching = {{0, 2}, {3, 1}};
  auto val = crossed.matching.empty() ? CombValidation{} : validate_comb_decomposition(p4, crossed);
  CHECK(!val.ok());
  CHECK(std::find(val.violated.begin(), val.violated.end(), 6) != val.violated.end());

  // an edge inside S violates clause 2
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  CombDecomposition bad;
  bad.A = {VertexSet::of(3, {0, 1})};
  bad.x_tail = {};
  bad.M = {};
  bad.Y = {VertexSet::of(3, {2}), VertexSet(3)};
  bad.stripped = VertexSet(3);
  auto val2 = validate_comb_decomposition(g, bad);
  CHECK(!val2.ok());
  CHECK(std::find(val2.violated.begin(), val2.violated.end(), 2) != val2.violated.end());
}

TEST_CASE("residual after removing matched edges") {
  Graph p4 = patterns::p4();
  auto dec = find_comb_decomposition(p4);
  REQUIRE(dec.has_value());
  Graph res = comb_residual(p4, *dec);
  Graph want(4);
  want.add_edge(1, 2);
  CHECK(res == want);
  CHECK(is_threshold(res));

  // threshold graph: nothing removed
  Graph star(4);
  for (int leaf = 1; leaf < 4; ++leaf) star.add_edge(0, leaf);
  auto sdec = find_comb_decomposition(star);
  REQUIRE(sdec.has_value());
  CHECK(comb_residual(star, *sdec) == star);

  CombDecomposition junk;
  CHECK_THROWS(comb_residual(p4, junk));
}

TEST_CASE("s/k/c decomposition") {
  auto c5d = skc_decompose(patterns::c5());
  REQUIRE(c5d.has_value());
  CHECK(c5d->C == VertexSet::full(5));
  CHECK(c5d->S.count() == 0);
  CHECK(c5d->K.count() == 0);

  auto p4d = skc_decompose(patterns::p4());
  REQUIRE(p4d.has_value());
  CHECK(p4d->C.count() == 0);

  // C5 completely joined to an edge
  Graph g(7);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  g.add_edge(5, 6);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, 5);
    g.add_edge(i, 6);
  }
  auto d = skc_decompose(g);
  REQUIRE(d.has_value());
  CHECK(d->C == VertexSet::of(7, {0, 1, 2, 3, 4}));
  CHECK(d->K == VertexSet::of(7, {5, 6}));
  CHECK(d->S.count() == 0);

  CHECK(!skc_decompose(patterns::c4()).has_value());
}

TEST_CASE("decomposer output always validates") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 400; ++it) {
    Graph g = random_comb(6, rng);
    auto dec = find_comb_decomposition(g);
    REQUIRE(dec.has_value());
    CHECK(validate_comb_decomposition(g, *dec).ok());
  }
}
