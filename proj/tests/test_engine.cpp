#include <doctest.h>

#include <algorithm>
#include <random>

#include "comblab/enumerate.hpp"
#include "comblab/gadgets.hpp"
#include "comblab/recognition.hpp"
#include "comblab/snp_engine.hpp"

using namespace comblab;

TEST_CASE("pipeline on the oriented path fixture, step by step") {
  OrientedGraph d = gadgets::ex_p4();
  auto [mg, whole] = missing_graph(d);
  auto dec = find_comb_decomposition(mg);
  REQUIRE(dec.has_value());

  auto [d1, t1] = orient_delta_paths(d, *dec);
  std::vector<std::pair<int, int>> phase1{{1, 0}, {3, 2}};
  CHECK(t1.path_arcs == phase1);
  CHECK(d1.has_arc(1, 0));
  CHECK(d1.has_arc(3, 2));
  CHECK(missing_graph(d1).first.edge_count() == 1);
  CHECK(missing_graph(d1).first.adjacent(1, 2));

  auto [t, t2] = complete_to_tournament(d1);
  std::vector<std::pair<int, int>> phase2{{1, 2}};
  CHECK(t2.residual_arcs == phase2);
  CHECK(t.arcs().size() == 6);

  SNPCertificate cert = find_snp_vertex(d);
  CHECK(cert.feed == 2);
  CHECK(cert.d_plus == 0);
  CHECK(cert.d_plus_plus == 0);
  REQUIRE(cert.case_label.has_value());
  CHECK(cert.case_label->kind == CaseLabel::InY);
  CHECK(cert.case_label->level == 1);
  CHECK(cert.case_label->terminal);

  auto audit = reorientation_certificate(d, cert, *dec);
  CHECK(audit.reversed_arcs.empty());
  CHECK(audit.ok());
}

TEST_CASE("tournament input is handled directly") {
  std::mt19937_64 rng(41);
  OrientedGraph t = random_tournament(7, rng);
  SNPCertificate cert = find_snp_vertex(t);
  CHECK(has_snp(t, cert.feed));
  CHECK(cert.trace.added_arcs.empty());
  REQUIRE(cert.case_label.has_value());
  CHECK(cert.case_label->kind == CaseLabel::Whole);
}

TEST_CASE("two isolated vertices: completion tie-break") {
  OrientedGraph d(2);
  SNPCertificate cert = find_snp_vertex(d);
  std::vector<std::pair<int, int>> want{{0, 1}};
  CHECK(cert.trace.added_arcs == want);
  CHECK(cert.feed == 1);
}

TEST_CASE("non-comb missing graph is rejected") {
  CHECK_THROWS_AS(find_snp_vertex(gadgets::c4_complement_gadget()), snp_error);
}

TEST_CASE("completion phases cover each missing edge exactly once") {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 400; ++it) {
    Graph g = random_comb(7, rng);
    if (g.edge_count() == 0) continue;
    OrientedGraph d = random_orientation_of_complement(g, rng);
    auto dec = find_comb_decomposition(g);
    REQUIRE(dec.has_value());

    SNPCertificate cert = find_snp_vertex(d);
    const CompletionTrace& tr = cert.trace;

    std::vector<std::pair<int, int>> both = tr.path_arcs;
    both.insert(both.end(), tr.residual_arcs.begin(), tr.residual_arcs.end());
    CHECK(tr.added_arcs == both);
    CHECK(tr.added_arcs.size() == static_cast<size_t>(g.edge_count()));

    std::vector<MissingEdge> covered;
    for (auto [u, v] : tr.added_arcs) {
      CHECK(g.adjacent(u, v));
      covered.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(covered.begin(), covered.end());
    CHECK(std::adjacent_find(covered.begin(), covered.end()) == covered.end());

    // phase 1 touches only matching edges
    for (auto [u, v] : tr.path_arcs) {
      MissingEdge e{std::min(u, v), std::max(u, v)};
      bool matched = false;
      for (auto [m, y] : dec->matching)
        matched |= (e == MissingEdge{std::min(m, y), std::max(m, y)});
      CHECK(matched);
    }

    // result is a tournament extending the input
    CHECK(cert.tournament.arcs().size() ==
          static_cast<size_t>(g.size() * (g.size() - 1) / 2));
    for (auto [u, v] : d.arcs()) CHECK(cert.tournament.has_arc(u, v));

    CHECK(cert.d_plus <= cert.d_plus_plus);
    CHECK(has_snp(d, cert.feed));
    CHECK(reorientation_certificate(d, cert, *dec).ok());
  }
}

TEST_CASE("case labels name the feed's block") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 200; ++it) {
    Graph g = random_comb(6, rng);
    if (g.edge_count() == 0) continue;
    OrientedGraph d = random_orientation_of_complement(g, rng);
    SNPCertificate cert = find_snp_vertex(d);
    REQUIRE(cert.case_label.has_value());
    auto dec = find_comb_decomposition(g);
    REQUIRE(dec.has_value());
    const CaseLabel& cl = *cert.case_label;
    int f = cert.feed;
    switch (cl.kind) {
      case CaseLabel::Whole:
        CHECK(g.degree(f) == 0);
        break;
      case CaseLabel::InM:
        REQUIRE(cl.level >= 1);
        CHECK(dec->M[cl.level - 1].test(f));
        break;
      case CaseLabel::InY:
        REQUIRE(cl.level >= 1);
        CHECK(dec->Y[cl.level - 1].test(f));
        break;
      case CaseLabel::InYNext:
        CHECK(dec->Y[dec->levels()].test(f));
        break;
      case CaseLabel::InYLast:
        CHECK(dec->Y[dec->levels() + 1].test(f));
        break;
      case CaseLabel::InAOrX: {
        bool in_ax = false;
        for (const auto& a : dec->A) in_ax |= a.test(f);
        for (const auto& x : dec->x_tail) in_ax |= x.test(f);
        CHECK(in_ax);
        break;
      }
    }
    CHECK(!cl.to_string().empty());
  }
}
