#include "comblab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "comblab/dependency.hpp"
#include "comblab/enumerate.hpp"
#include "comblab/gadgets.hpp"
#include "comblab/graph.hpp"
#include "comblab/median_order.hpp"
#include "comblab/patterns.hpp"
#include "comblab/recognition.hpp"
#include "comblab/snp_engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace comblab {

namespace {

constexpr size_t kMaxKeptFailures = 32;

struct Collector {
  std::mutex mu;
  std::vector<InstanceFailure> items;  // unbounded while running; trimmed at the end
  std::atomic<uint64_t> failed{0};
  std::atomic<uint64_t> total{0};

  void fail(uint64_t idx, const std::string& id, std::string reason) {
    failed.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(mu);
    items.push_back({idx, id, std::move(reason)});
  }
};

/// One instance being checked; property failures go through `require`/`fail`
/// with a category prefix so reports can be sliced per claim.
struct Ctx {
  Collector& col;
  uint64_t idx;
  std::string id;

  void fail(const std::string& category, const std::string& detail) {
    col.fail(idx, id, category + ": " + detail);
  }
  void require(bool ok, const char* category, const std::string& detail) {
    if (!ok) fail(category, detail);
  }
};

template <class F>
void parallel_for(uint64_t count, int jobs, F&& body) {
#ifdef _OPENMP
  if (jobs != 1) {
    int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      body(static_cast<uint64_t>(i));
    return;
  }
#endif
  for (uint64_t i = 0; i < count; ++i) body(i);
}

/// Exceptions must not unwind out of a worker; record them as failures.
template <class F>
void guarded(Ctx& ctx, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    ctx.fail("exception", e.what());
  }
}

std::mt19937_64 instance_rng(uint64_t seed, uint64_t idx) {
  std::seed_seq seq{seed, idx};
  return std::mt19937_64(seq);
}

uint64_t pow3(int k) {
  uint64_t r = 1;
  while (k-- > 0) r *= 3;
  return r;
}

int pair_count(int n) { return n * (n - 1) / 2; }

/// Oriented graph from a base-3 pair index: digit 0 = missing, 1 = u->v,
/// 2 = v->u, pairs in the canonical (u,v) u<v order.
OrientedGraph oriented_from_trits(int n, uint64_t t) {
  OrientedGraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      switch (t % 3) {
        case 1: d.add_arc(u, v); break;
        case 2: d.add_arc(v, u); break;
        default: break;
      }
      t /= 3;
    }
  return d;
}

bool has_isolated(const Graph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

/// Blocks of all oriented graphs on 1..n vertices, indexed flat.
struct TritBlocks {
  std::vector<int> sizes;       // vertex count per block
  std::vector<uint64_t> start;  // flat index of block start
  uint64_t total = 0;

  explicit TritBlocks(int n) {
    for (int m = 1; m <= n; ++m) {
      sizes.push_back(m);
      start.push_back(total);
      total += pow3(pair_count(m));
    }
  }
  std::pair<int, uint64_t> locate(uint64_t idx) const {
    size_t b = sizes.size() - 1;
    while (start[b] > idx) --b;
    return {sizes[b], idx - start[b]};
  }
};

// ---------------------------------------------------------------------------
// tournament-feed-snp

void check_tournament(Ctx& ctx, const OrientedGraph& t) {
  MedianOrder order = local_median_order(t);
  int f = feed_vertex(order);
  ctx.require(has_snp(t, f), "feed-snp",
              "feed vertex " + std::to_string(f) + " lacks the property");
}

SuiteReport suite_tournament(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.samples > 0) {
    col.total = static_cast<uint64_t>(p.samples);
    parallel_for(col.total, p.jobs, [&](uint64_t idx) {
      Ctx ctx{col, idx, "sample " + std::to_string(idx)};
      guarded(ctx, [&] {
        auto rng = instance_rng(p.seed, idx);
        check_tournament(ctx, random_tournament(p.n, rng));
      });
    });
  } else {
    if (p.n < 1 || p.n > 7) throw std::invalid_argument("tournament-feed-snp: exhaustive n must be 1..7");
    uint64_t count = uint64_t{1} << pair_count(p.n);
    col.total = count;
    Graph edgeless(p.n);
    parallel_for(count, p.jobs, [&](uint64_t mask) {
      Ctx ctx{col, mask, "tournament mask " + std::to_string(mask)};
      guarded(ctx, [&] { check_tournament(ctx, orientation_from_mask(edgeless, mask)); });
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// comb-snc (certificate + witness + delta structure + reorientation audit)

int matched_level(const CombDecomposition& dec, const MissingEdge& e) {
  int tm = dec.m_level_of(e.a);
  if (tm >= 0 && dec.y_index_of(e.b) == tm) return tm + 1;
  tm = dec.m_level_of(e.b);
  if (tm >= 0 && dec.y_index_of(e.a) == tm) return tm + 1;
  return -1;
}

void check_comb_instance(Ctx& ctx, const OrientedGraph& d, const CombDecomposition& dec) {
  SNPCertificate cert;
  try {
    cert = find_snp_vertex(d);
  } catch (const std::exception& e) {
    ctx.fail("certificate", e.what());
    return;
  }
  int f = cert.feed;
  VertexSet second = second_out_neighbors(d, f);
  ctx.require(cert.d_plus == d.out_degree(f) && cert.d_plus_plus == second.count(),
              "certificate", "reported degrees disagree with recomputation");
  ctx.require(d.out_degree(f) <= second.count(), "certificate",
              "feed " + std::to_string(f) + " has d+ > d++");
  ctx.require(snp_witnesses(d).test(f), "witness",
              "feed " + std::to_string(f) + " not in the witness set");

  DependencyDigraph delta = dependency_digraph(d);
  ctx.require(is_disjoint_paths(delta), "delta-structure", "not a disjoint union of paths");
  for (auto [i, j] : delta.arcs) {
    int t1 = matched_level(dec, delta.nodes[i]);
    int t2 = matched_level(dec, delta.nodes[j]);
    if (t1 < 1 || t1 != t2)
      ctx.fail("delta-structure", "arc joins edges outside a single matched level");
  }

  try {
    ReorientationCertificate rc = reorientation_certificate(d, cert, dec);
    ctx.require(rc.order_still_valid, "audit", "order violated after reorientation");
    ctx.require(rc.feed_has_snp, "audit", "feed lost the property after reorientation");
  } catch (const std::exception& e) {
    ctx.fail("audit", e.what());
  }
}

SuiteReport suite_comb_snc(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.samples > 0) {
    col.total = static_cast<uint64_t>(p.samples);
    int lo = std::max(2, p.n - 1);
    parallel_for(col.total, p.jobs, [&](uint64_t idx) {
      Ctx ctx{col, idx, "sample " + std::to_string(idx)};
      guarded(ctx, [&] {
        auto rng = instance_rng(p.seed, idx);
        Graph g = random_comb(p.n, rng);
        while (g.size() < lo) g = random_comb(p.n, rng);
        auto dec = find_comb_decomposition(g);
        if (!dec) {
          ctx.fail("decomposition", "no decomposition for a generated instance");
          return;
        }
        check_comb_instance(ctx, random_orientation_of_complement(g, rng), *dec);
      });
    });
  } else {
    if (p.n < 2 || p.n > 6) throw std::invalid_argument("comb-snc: exhaustive n must be 2..6");
    int pairs = pair_count(p.n);
    uint64_t gcount = uint64_t{1} << pairs;
    parallel_for(gcount, p.jobs, [&](uint64_t gmask) {
      Graph g = graph_from_mask(p.n, gmask);
      if (has_isolated(g) || !forbidden_free(g, PatternFamily::Comb)) return;
      auto dec = find_comb_decomposition(g);
      if (!dec) {
        col.total.fetch_add(1, std::memory_order_relaxed);
        Ctx ctx{col, gmask << 24, "graph mask " + std::to_string(gmask)};
        ctx.fail("decomposition", "recognizer accepted but no decomposition found");
        return;
      }
      uint64_t ocount = uint64_t{1} << (pairs - g.edge_count());
      col.total.fetch_add(ocount, std::memory_order_relaxed);
      for (uint64_t omask = 0; omask < ocount; ++omask) {
        Ctx ctx{col, (gmask << 24) | omask,
                "graph mask " + std::to_string(gmask) + " orientation " + std::to_string(omask)};
        guarded(ctx, [&] { check_comb_instance(ctx, orientation_from_mask(g, omask), *dec); });
      }
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// lemma1 (good edge <=> in-degree 0 in the dependency digraph)

void check_good_edges(Ctx& ctx, const OrientedGraph& d) {
  DependencyDigraph delta = dependency_digraph(d);
  for (size_t i = 0; i < delta.nodes.size(); ++i) {
    bool good = convenient_orientations(d, delta.nodes[i]).good();
    bool indeg0 = delta.in_degree(static_cast<int>(i)) == 0;
    if (good != indeg0)
      ctx.fail("good-iff-indegree0",
               "edge {" + std::to_string(delta.nodes[i].a) + "," +
                   std::to_string(delta.nodes[i].b) + "}: good=" + std::to_string(good) +
                   " indeg0=" + std::to_string(indeg0));
  }
}

SuiteReport suite_lemma1(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.samples > 0) {
    col.total = static_cast<uint64_t>(p.samples);
    parallel_for(col.total, p.jobs, [&](uint64_t idx) {
      Ctx ctx{col, idx, "sample " + std::to_string(idx)};
      guarded(ctx, [&] {
        auto rng = instance_rng(p.seed, idx);
        int n = 2 + static_cast<int>(idx % static_cast<uint64_t>(p.n - 1));  // 2..n
        check_good_edges(ctx, random_oriented(n, rng));
      });
    });
  } else {
    if (p.n < 1 || p.n > 5) throw std::invalid_argument("lemma1: exhaustive n must be 1..5");
    TritBlocks blocks(p.n);
    col.total = blocks.total;
    parallel_for(blocks.total, p.jobs, [&](uint64_t idx) {
      auto [m, t] = blocks.locate(idx);
      Ctx ctx{col, idx, "n=" + std::to_string(m) + " trits " + std::to_string(t)};
      guarded(ctx, [&] { check_good_edges(ctx, oriented_from_trits(m, t)); });
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// threshold-empty-delta

SuiteReport suite_threshold_empty_delta(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.n < 1 || p.n > 5) throw std::invalid_argument("threshold-empty-delta: n must be 1..5");
  TritBlocks blocks(p.n);
  std::atomic<uint64_t> counted{0};
  parallel_for(blocks.total, p.jobs, [&](uint64_t idx) {
    auto [m, t] = blocks.locate(idx);
    OrientedGraph d = oriented_from_trits(m, t);
    auto [mg, whole] = missing_graph(d);
    if (!is_threshold(mg)) return;
    counted.fetch_add(1, std::memory_order_relaxed);
    Ctx ctx{col, idx, "n=" + std::to_string(m) + " trits " + std::to_string(t)};
    guarded(ctx, [&] {
      DependencyDigraph delta = dependency_digraph(d);
      ctx.require(delta.arcs.empty(), "empty-delta",
                  std::to_string(delta.arcs.size()) + " arcs on a threshold-missing instance");
    });
  });
  col.total = counted.load();
  return rep;
}

// ---------------------------------------------------------------------------
// recognizer-cross

SuiteReport suite_recognizer_cross(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.n < 1 || p.n > 7) throw std::invalid_argument("recognizer-cross: n must be 1..7");
  for (int m = 1; m <= p.n; ++m) {
    uint64_t gcount = uint64_t{1} << pair_count(m);
    col.total.fetch_add(gcount);
    parallel_for(gcount, p.jobs, [&](uint64_t gmask) {
      Ctx ctx{col, (static_cast<uint64_t>(m) << 32) | gmask,
              "n=" + std::to_string(m) + " graph mask " + std::to_string(gmask)};
      guarded(ctx, [&] {
        Graph g = graph_from_mask(m, gmask);
        ctx.require(is_threshold(g) == forbidden_free(g, PatternFamily::Threshold),
                    "threshold-cross", "elimination and pattern search disagree");
        if (has_isolated(g)) return;
        auto dec = find_comb_decomposition(g);
        bool free = forbidden_free(g, PatternFamily::Comb);
        ctx.require(dec.has_value() == free, "comb-cross",
                    "decomposition " + std::string(dec ? "found" : "absent") +
                        " but pattern-free=" + std::to_string(free));
        if (dec) {
          auto val = validate_comb_decomposition(g, *dec);
          if (!val.ok()) {
            std::string clauses;
            for (int c : val.violated) clauses += " " + std::to_string(c);
            ctx.fail("comb-validate", "clauses" + clauses);
          }
        }
      });
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// closure (complement invariance, hereditary closure, threshold => comb)

SuiteReport suite_closure(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.n < 1 || p.n > 7) throw std::invalid_argument("closure: n must be 1..7");
  for (int m = 1; m <= p.n; ++m) {
    uint64_t gcount = uint64_t{1} << pair_count(m);
    col.total.fetch_add(gcount);
    parallel_for(gcount, p.jobs, [&](uint64_t gmask) {
      Ctx ctx{col, (static_cast<uint64_t>(m) << 32) | gmask,
              "n=" + std::to_string(m) + " graph mask " + std::to_string(gmask)};
      guarded(ctx, [&] {
        Graph g = graph_from_mask(m, gmask);
        bool comb = forbidden_free(g, PatternFamily::Comb);
        ctx.require(comb == forbidden_free(complement(g), PatternFamily::Comb),
                    "complement", "class not invariant under complement");
        if (is_threshold(g))
          ctx.require(comb, "threshold-implies", "threshold graph rejected");
        if (comb) {
          for (int v = 0; v < m; ++v) {
            VertexSet rest = VertexSet::full(m);
            rest.reset(v);
            if (!forbidden_free(induced_subgraph(g, rest).first, PatternFamily::Comb))
              ctx.fail("hereditary", "deleting vertex " + std::to_string(v) + " leaves the class");
          }
        }
      });
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// residual-threshold

SuiteReport suite_residual_threshold(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.n < 2 || p.n > 7) throw std::invalid_argument("residual-threshold: n must be 2..7");
  for (int m = 2; m <= p.n; ++m) {
    uint64_t gcount = uint64_t{1} << pair_count(m);
    parallel_for(gcount, p.jobs, [&](uint64_t gmask) {
      Graph g = graph_from_mask(m, gmask);
      if (has_isolated(g)) return;
      auto dec = find_comb_decomposition(g);
      if (!dec) return;
      col.total.fetch_add(1, std::memory_order_relaxed);
      Ctx ctx{col, (static_cast<uint64_t>(m) << 32) | gmask,
              "n=" + std::to_string(m) + " graph mask " + std::to_string(gmask)};
      guarded(ctx, [&] {
        ctx.require(is_threshold(comb_residual(g, *dec)), "residual",
                    "residual after removing matching edges is not threshold");
      });
    });
  }
  return rep;
}

// ---------------------------------------------------------------------------
// arc-reversal

SuiteReport suite_arc_reversal(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  if (p.n < 3 || p.n > 12) throw std::invalid_argument("arc-reversal: n must be 3..12");
  int samples = p.samples > 0 ? p.samples : 10000;
  col.total = static_cast<uint64_t>(samples);
  parallel_for(col.total, p.jobs, [&](uint64_t idx) {
    Ctx ctx{col, idx, "sample " + std::to_string(idx)};
    guarded(ctx, [&] {
      auto rng = instance_rng(p.seed, idx);
      int n = 3 + static_cast<int>(idx % static_cast<uint64_t>(p.n - 2));  // 3..n
      OrientedGraph d = random_oriented(n, rng);
      std::vector<int> init(n);
      std::iota(init.begin(), init.end(), 0);
      std::shuffle(init.begin(), init.end(), rng);
      MedianOrder order = local_median_order(d, &init);
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[order.order[i]] = i;
      std::vector<std::pair<int, int>> backward;
      for (auto [u, v] : d.arcs())
        if (pos[u] > pos[v]) backward.emplace_back(u, v);
      if (backward.empty()) return;  // nothing to reverse; vacuously fine
      auto [u, v] = backward[std::uniform_int_distribution<size_t>(0, backward.size() - 1)(rng)];
      OrientedGraph d2 = reverse_arc(d, u, v);
      ctx.require(!feedback_violation(d2, order.order).has_value(), "still-valid",
                  "order violated after reversing a backward arc");
    });
  });
  return rep;
}

// ---------------------------------------------------------------------------
// gadgets

void check_gadget_d(Ctx& ctx) {
  OrientedGraph d = gadgets::c4_complement_gadget();
  auto me = missing_edges(d);
  ctx.require(me == std::vector<MissingEdge>{{0, 1}, {2, 3}}, "fixture",
              "unexpected missing edges");
  DependencyDigraph delta = dependency_digraph(d);
  ctx.require(loses_to(d, {0, 1}, {2, 3}) && loses_to(d, {2, 3}, {0, 1}), "fixture",
              "expected mutual losing relations");
  ctx.require(delta.arcs.size() == 2, "fixture", "expected exactly a digon");
  ctx.require(!is_disjoint_paths(delta), "fixture", "digon passed the path test");
}

void check_gadget_chair(Ctx& ctx) {
  OrientedGraph d = gadgets::chair_gadget();
  auto [mg, whole] = missing_graph(d);
  ctx.require(whole.count() == 0, "fixture", "unexpected whole vertex");
  ctx.require(find_induced(mg, patterns::chair()).has_value() && mg.edge_count() == 4,
              "fixture", "missing graph is not a chair");
  DependencyDigraph delta = dependency_digraph(d);
  bool found = false;
  for (size_t i = 0; i < delta.nodes.size(); ++i)
    if (delta.out_degree(static_cast<int>(i)) == 2) found = true;
  ctx.require(found, "fixture", "no dependency node of out-degree 2");
  ctx.require(!is_disjoint_paths(delta), "fixture", "out-degree 2 passed the path test");
}

void check_gadget_co_chair(Ctx& ctx) {
  OrientedGraph d = gadgets::co_chair_gadget();
  auto [mg, whole] = missing_graph(d);
  ctx.require(mg == patterns::co_chair(), "fixture", "missing graph is not the co-chair");
  ctx.require(!is_disjoint_paths(dependency_digraph(d)), "fixture",
              "dependency digraph is a disjoint union of paths");
  uint64_t mask = gadgets::derive_co_chair_gadget_mask();
  ctx.require(orientation_from_mask(patterns::co_chair(), mask) == d, "fixture",
              "frozen gadget differs from the derivation");
}

void check_ex_p4(Ctx& ctx) {
  OrientedGraph d = gadgets::ex_p4();
  DependencyDigraph delta = dependency_digraph(d);
  ctx.require(delta.nodes == std::vector<MissingEdge>{{0, 1}, {1, 2}, {2, 3}}, "fixture",
              "unexpected dependency nodes");
  int i01 = delta.node_index({0, 1}), i23 = delta.node_index({2, 3});
  ctx.require(delta.arcs == std::vector<std::pair<int, int>>{{i01, i23}}, "fixture",
              "expected the single arc {0,1} -> {2,3}");
}

void check_closure_preservation(Ctx& ctx, std::mt19937_64& rng) {
  int n = 3 + static_cast<int>(rng() % 4);  // host graph on 3..6 vertices
  Graph g = random_graph(n, rng);
  int v = static_cast<int>(rng() % n);
  VertexSet rest = VertexSet::full(n);
  rest.reset(v);
  Graph g_minus_v = induced_subgraph(g, rest).first;
  OrientedGraph d_prime = random_orientation_of_complement(g_minus_v, rng);
  OrientedGraph d = induced_closure_gadget(d_prime, g, v);

  DependencyDigraph before = dependency_digraph(d_prime);
  DependencyDigraph after = dependency_digraph(d);
  // arcs must coincide on the shared pairs; new nodes must be isolated
  std::vector<std::pair<MissingEdge, MissingEdge>> before_arcs, after_arcs;
  for (auto [i, j] : before.arcs) before_arcs.emplace_back(before.nodes[i], before.nodes[j]);
  for (auto [i, j] : after.arcs) after_arcs.emplace_back(after.nodes[i], after.nodes[j]);
  std::sort(before_arcs.begin(), before_arcs.end());
  std::sort(after_arcs.begin(), after_arcs.end());
  ctx.require(before_arcs == after_arcs, "closure-preservation",
              "dependency arcs changed when closing the instance");
  int k = g.size() - 1;
  for (size_t i = 0; i < after.nodes.size(); ++i)
    if (after.nodes[i].b >= k)
      ctx.require(after.out_degree(static_cast<int>(i)) == 0 &&
                      after.in_degree(static_cast<int>(i)) == 0,
                  "closure-preservation", "new missing edge is not isolated");
}

SuiteReport suite_gadgets(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  int samples = p.samples > 0 ? p.samples : 1000;
  col.total = 4 + static_cast<uint64_t>(samples);
  {
    Ctx ctx{col, 0, "gadget-d"};
    guarded(ctx, [&] { check_gadget_d(ctx); });
  }
  {
    Ctx ctx{col, 1, "gadget-chair"};
    guarded(ctx, [&] { check_gadget_chair(ctx); });
  }
  {
    Ctx ctx{col, 2, "gadget-co-chair"};
    guarded(ctx, [&] { check_gadget_co_chair(ctx); });
  }
  {
    Ctx ctx{col, 3, "ex-p4"};
    guarded(ctx, [&] { check_ex_p4(ctx); });
  }
  parallel_for(static_cast<uint64_t>(samples), p.jobs, [&](uint64_t idx) {
    Ctx ctx{col, 4 + idx, "closure sample " + std::to_string(idx)};
    guarded(ctx, [&] {
      auto rng = instance_rng(p.seed, idx);
      check_closure_preservation(ctx, rng);
    });
  });
  return rep;
}

// ---------------------------------------------------------------------------
// c4c5-membership

SuiteReport suite_c4c5(const SuiteParams& p, Collector& col) {
  SuiteReport rep;
  Graph c4 = patterns::c4(), c5 = patterns::c5();
  uint64_t c4n = uint64_t{1} << complement_pairs(c4).size();
  uint64_t c5n = uint64_t{1} << complement_pairs(c5).size();
  col.total = c4n + c5n;
  parallel_for(col.total, p.jobs, [&](uint64_t idx) {
    bool is_c4 = idx < c4n;
    const Graph& g = is_c4 ? c4 : c5;
    uint64_t mask = is_c4 ? idx : idx - c4n;
    Ctx ctx{col, idx,
            std::string(is_c4 ? "c4" : "c5") + " orientation " + std::to_string(mask)};
    guarded(ctx, [&] {
      OrientedGraph d = orientation_from_mask(g, mask);
      ctx.require(is_disjoint_paths(dependency_digraph(d)), "membership",
                  "dependency digraph is not a disjoint union of paths");
    });
  });
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"tournament-feed-snp", "comb-snc",          "lemma1",
          "threshold-empty-delta", "recognizer-cross", "closure",
          "residual-threshold",  "arc-reversal",      "gadgets",
          "c4c5-membership"};
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = name;
  j["params"] = {{"n", n}, {"seed", seed}, {"samples", samples}, {"jobs", jobs}};
  j["totals"] = {{"instances", total}, {"failed", failed}};
  j["passed"] = passed();
  j["seconds"] = seconds;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures)
    j["failures"].push_back({{"index", f.index}, {"id", f.id}, {"reason", f.reason}});
  j["failures_by_category"] = failures_by_category;
  return j.dump(2);
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  SuiteParams p = params;
  if (p.samples < 0) p.samples = 0;
  if (p.jobs < 0) p.jobs = 0;

  // per-suite defaults for n (sampled modes use larger hosts)
  if (p.n < 0) {
    if (name == "tournament-feed-snp") p.n = p.samples > 0 ? 10 : 6;
    else if (name == "comb-snc") p.n = p.samples > 0 ? 7 : 5;
    else if (name == "lemma1") p.n = p.samples > 0 ? 8 : 4;
    else if (name == "threshold-empty-delta") p.n = 5;
    else if (name == "arc-reversal") p.n = 8;
    else p.n = 6;
  }

  Collector col;
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (name == "tournament-feed-snp") rep = suite_tournament(p, col);
  else if (name == "comb-snc") rep = suite_comb_snc(p, col);
  else if (name == "lemma1") rep = suite_lemma1(p, col);
  else if (name == "threshold-empty-delta") rep = suite_threshold_empty_delta(p, col);
  else if (name == "recognizer-cross") rep = suite_recognizer_cross(p, col);
  else if (name == "closure") rep = suite_closure(p, col);
  else if (name == "residual-threshold") rep = suite_residual_threshold(p, col);
  else if (name == "arc-reversal") rep = suite_arc_reversal(p, col);
  else if (name == "gadgets") rep = suite_gadgets(p, col);
  else if (name == "c4c5-membership") rep = suite_c4c5(p, col);
  else throw std::invalid_argument("unknown suite: " + name);
  auto t1 = std::chrono::steady_clock::now();

  rep.name = name;
  rep.n = p.n;
  rep.seed = p.seed;
  rep.samples = p.samples;
  rep.jobs = p.jobs;
  rep.total = col.total.load();
  rep.failed = col.failed.load();
  rep.seconds = std::chrono::duration<double>(t1 - t0).count();

  // deterministic report independent of scheduling: order by instance index
  std::sort(col.items.begin(), col.items.end(),
            [](const InstanceFailure& a, const InstanceFailure& b) {
              return a.index != b.index ? a.index < b.index : a.reason < b.reason;
            });
  for (const auto& f : col.items) {
    auto colon = f.reason.find(':');
    rep.failures_by_category[f.reason.substr(0, colon)]++;
  }
  if (col.items.size() > kMaxKeptFailures) col.items.resize(kMaxKeptFailures);
  rep.failures = std::move(col.items);
  return rep;
}

}  // namespace comblab
