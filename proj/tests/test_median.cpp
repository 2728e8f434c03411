#include <doctest.h>

#include <numeric>
#include <random>

#include "comblab/enumerate.hpp"
#include "comblab/gadgets.hpp"
#include "comblab/median_order.hpp"

using namespace comblab;

namespace {

OrientedGraph three_cycle() {
  OrientedGraph d(3);
  d.add_arc(0, 1);
  d.add_arc(1, 2);
  d.add_arc(2, 0);
  return d;
}

OrientedGraph transitive_tournament(int n) {
  OrientedGraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
  return d;
}

}  // namespace

TEST_CASE("feedback violations") {
  CHECK(!feedback_violation(three_cycle(), {0, 1, 2}).has_value());

  OrientedGraph single(2);
  single.add_arc(0, 1);
  CHECK(!feedback_violation(single, {0, 1}).has_value());
  auto v = feedback_violation(single, {1, 0});
  REQUIRE(v.has_value());
  CHECK(v->i == 1);
  CHECK(v->j == 2);
  CHECK(v->at_left);

  CHECK_THROWS(feedback_violation(single, {0, 0}));
  CHECK_THROWS(feedback_violation(single, {0}));
}

TEST_CASE("local search finds a valid order") {
  auto mt = local_median_order(transitive_tournament(4));
  CHECK(mt.order == std::vector<int>{0, 1, 2, 3});
  CHECK(mt.forward_arcs == 6);
  CHECK(feed_vertex(mt) == 3);

  auto mc = local_median_order(three_cycle());
  CHECK(mc.forward_arcs == 2);
  CHECK(!feedback_violation(three_cycle(), mc.order).has_value());
}

TEST_CASE("local search from an explicit start") {
  OrientedGraph d = gadgets::ex_p4();
  std::vector<int> init{3, 2, 1, 0};
  auto m = local_median_order(d, &init);
  CHECK(!feedback_violation(d, m.order).has_value());
  CHECK(m.forward_arcs == count_forward_arcs(d, m.order));
}

TEST_CASE("arc reversal") {
  OrientedGraph d = three_cycle();
  OrientedGraph r = reverse_arc(d, 0, 1);
  CHECK(r.has_arc(1, 0));
  CHECK(!r.has_arc(0, 1));
  CHECK(r.has_arc(1, 2));
  CHECK_THROWS(reverse_arc(d, 0, 2));  // arc runs 2->0
}

TEST_CASE("exact oracle on fixtures") {
  OrientedGraph tt = transitive_tournament(5);
  auto o = max_forward_order_oracle(tt);
  CHECK(count_forward_arcs(tt, o) == 10);

  auto oc = max_forward_order_oracle(three_cycle());
  CHECK(count_forward_arcs(three_cycle(), oc) == 2);
}

TEST_CASE("oracle orders satisfy the feedback property, exhaustive tournaments") {
  for (int n = 2; n <= 6; ++n) {
    uint64_t masks = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < masks; ++mask) {
      OrientedGraph t(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          (mask >> bit) & 1 ? t.add_arc(v, u) : t.add_arc(u, v);
      auto o = max_forward_order_oracle(t);
      CHECK(!feedback_violation(t, o).has_value());
    }
  }
}

TEST_CASE("local search never beats the oracle and matches on random inputs") {
  std::mt19937_64 rng(37);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    OrientedGraph d = random_oriented(n, rng);
    auto m = local_median_order(d);
    auto o = max_forward_order_oracle(d);
    CHECK(m.forward_arcs <= count_forward_arcs(d, o));
    CHECK(!feedback_violation(d, m.order).has_value());
  }
}
