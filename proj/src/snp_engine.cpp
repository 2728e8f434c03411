#include "comblab/snp_engine.hpp"

#include <algorithm>
#include <sstream>

namespace comblab {

std::string CaseLabel::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Whole: return "whole";
    case InYNext: return "in_Y_l_plus_1";
    case InYLast: return "in_Y_l_plus_2";
    case InAOrX: return "in_A_or_X";
    case InM: os << "in_M(" << level; break;
    case InY: os << "in_Y(" << level; break;
  }
  os << (matched_toward_feed ? ",toward" : ",away") << (terminal ? ",terminal)" : ",inner)");
  return os.str();
}

namespace {

std::string describe_arcs(const OrientedGraph& d) {
  std::ostringstream os;
  for (auto [u, v] : d.arcs()) os << " (" << u << "," << v << ")";
  return os.str();
}

}  // namespace

std::pair<OrientedGraph, CompletionTrace> orient_delta_paths(const OrientedGraph& d,
                                                             const CombDecomposition& dec) {
  DependencyDigraph delta = dependency_digraph(d);
  if (!is_disjoint_paths(delta))
    throw snp_error("dependency digraph is not a disjoint union of paths");

  std::vector<MissingEdge> match_edges;
  for (auto [m, y] : dec.matching) match_edges.emplace_back(m, y);
  auto is_matching_edge = [&](const MissingEdge& e) {
    return std::find(match_edges.begin(), match_edges.end(), e) != match_edges.end();
  };

  OrientedGraph d_prime = d;
  CompletionTrace trace;
  for (const auto& path : maximal_paths(delta)) {
    const MissingEdge& head = delta.nodes[path[0]];
    if (!is_matching_edge(head)) {
      if (path.size() > 1)
        throw snp_error("dependency arc outside the matching edges");
      continue;  // isolated non-matching node: phase 2
    }
    // endpoint sides: m in an M block, y in a Y block
    auto side = [&](const MissingEdge& e) -> std::pair<int, int> {
      bool a_is_m = dec.m_level_of(e.a) >= 0;
      bool b_is_m = dec.m_level_of(e.b) >= 0;
      if (a_is_m == b_is_m) throw snp_error("matching edge does not join M to Y");
      return a_is_m ? std::pair{e.a, e.b} : std::pair{e.b, e.a};
    };
    auto [m0, y0] = side(head);
    ConvenientOrientations head_or = convenient_orientations(d, head);
    if (!head_or.good()) throw snp_error("path head is not a good missing edge");
    bool head_m_to_y = head_or.forward ? (head.a == m0) : (head.b == m0);
    if (head_or.forward && head_or.backward) head_m_to_y = true;  // tie-break: M -> Y

    for (size_t idx = 0; idx < path.size(); ++idx) {
      const MissingEdge& e = delta.nodes[path[idx]];
      if (!is_matching_edge(e)) throw snp_error("dependency path leaves the matching edges");
      auto [m, y] = side(e);
      bool m_to_y = (idx % 2 == 0) ? head_m_to_y : !head_m_to_y;
      auto arc = m_to_y ? std::pair{m, y} : std::pair{y, m};
      d_prime.add_arc(arc.first, arc.second);
      trace.path_arcs.push_back(arc);
      trace.added_arcs.push_back(arc);
    }
  }
  return {std::move(d_prime), std::move(trace)};
}

std::pair<OrientedGraph, CompletionTrace> complete_to_tournament(const OrientedGraph& d_prime) {
  CompletionTrace trace;
  OrientedGraph t = d_prime;
  for (const MissingEdge& e : missing_edges(d_prime)) {
    ConvenientOrientations c = convenient_orientations(d_prime, e);
    if (!c.good()) throw snp_error("residual missing edge is not good");
    auto arc = c.forward ? std::pair{e.a, e.b} : std::pair{e.b, e.a};
    trace.residual_arcs.push_back(arc);
    trace.added_arcs.push_back(arc);
  }
  for (auto [u, v] : trace.residual_arcs) t.add_arc(u, v);
  return {std::move(t), std::move(trace)};
}

SNPCertificate find_snp_vertex(const OrientedGraph& d) {
  auto [g, whole] = missing_graph(d);
  auto dec = find_comb_decomposition(g);
  if (!dec) throw snp_error("missing graph is not a comb");

  auto [d_prime, trace1] = orient_delta_paths(d, *dec);
  auto [t, trace2] = complete_to_tournament(d_prime);
  CompletionTrace trace = std::move(trace1);
  trace.residual_arcs = trace2.residual_arcs;
  trace.added_arcs.insert(trace.added_arcs.end(), trace2.added_arcs.begin(),
                          trace2.added_arcs.end());

  MedianOrder order = local_median_order(t);
  int feed = feed_vertex(order);

  SNPCertificate cert;
  cert.feed = feed;
  cert.tournament = t;
  cert.order = order;
  cert.trace = std::move(trace);
  cert.d_plus = d.out_degree(feed);
  cert.d_plus_plus = second_out_neighbors(d, feed).count();
  cert.case_label = classify_feed_case(d, d_prime, *dec, whole, feed);

  if (cert.d_plus > cert.d_plus_plus) {
    std::ostringstream os;
    os << "SNP verification failure (falsification candidate): feed=" << feed
       << " d+=" << cert.d_plus << " d++=" << cert.d_plus_plus << "; input arcs:"
       << describe_arcs(d) << "; tournament arcs:" << describe_arcs(t) << "; order:";
    for (int v : order.order) os << " " << v;
    throw snp_error(os.str());
  }
  return cert;
}

namespace {

std::optional<int> matching_partner(const CombDecomposition& dec, int v) {
  for (auto [m, y] : dec.matching) {
    if (m == v) return y;
    if (y == v) return m;
  }
  return std::nullopt;
}

}  // namespace

CaseLabel classify_feed_case(const OrientedGraph& d, const OrientedGraph& d_prime,
                             const CombDecomposition& dec, const VertexSet& whole, int feed) {
  CaseLabel label;
  if (whole.test(feed)) {
    label.kind = CaseLabel::Whole;
    return label;
  }
  int l = dec.levels();
  int m_lvl = dec.m_level_of(feed);
  int y_idx = dec.y_index_of(feed);
  if (m_lvl >= 0 || (y_idx >= 0 && y_idx < l)) {
    label.kind = m_lvl >= 0 ? CaseLabel::InM : CaseLabel::InY;
    label.level = (m_lvl >= 0 ? m_lvl : y_idx) + 1;
    auto partner = matching_partner(dec, feed);
    if (!partner) throw std::invalid_argument("matched vertex without matching entry");
    label.matched_toward_feed = d_prime.has_arc(*partner, feed);
    DependencyDigraph delta = dependency_digraph(d);
    int node = delta.node_index(MissingEdge(feed, *partner));
    if (node < 0) throw std::invalid_argument("matching edge is not a dependency node");
    label.terminal = delta.out_degree(node) == 0;
    return label;
  }
  if (y_idx == l) {
    label.kind = CaseLabel::InYNext;
    return label;
  }
  if (y_idx == l + 1) {
    label.kind = CaseLabel::InYLast;
    return label;
  }
  for (const auto& b : dec.A)
    if (b.test(feed)) {
      label.kind = CaseLabel::InAOrX;
      return label;
    }
  for (const auto& b : dec.x_tail)
    if (b.test(feed)) {
      label.kind = CaseLabel::InAOrX;
      return label;
    }
  throw std::invalid_argument("feed vertex not covered by the decomposition");
}

ReorientationCertificate reorientation_certificate(const OrientedGraph& d,
                                                   const SNPCertificate& cert,
                                                   const CombDecomposition& dec) {
  int f = cert.feed;
  std::optional<MissingEdge> keep;
  if (cert.case_label &&
      (cert.case_label->kind == CaseLabel::InM || cert.case_label->kind == CaseLabel::InY) &&
      !cert.case_label->terminal) {
    if (auto p = matching_partner(dec, f)) keep = MissingEdge(f, *p);
  }

  ReorientationCertificate out;
  OrientedGraph t_prime = cert.tournament;
  for (const MissingEdge& e : missing_edges(d)) {
    if (!e.contains(f)) continue;
    if (keep && e == *keep) continue;
    int other = e.other(f);
    if (t_prime.has_arc(f, other)) {
      t_prime.remove_arc(f, other);
      t_prime.add_arc(other, f);
      out.reversed_arcs.emplace_back(f, other);
    }
  }
  out.order_still_valid = !feedback_violation(t_prime, cert.order.order).has_value();
  out.feed_has_snp = has_snp(t_prime, f);
  return out;
}

}  // namespace comblab
