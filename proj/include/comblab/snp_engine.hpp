#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comblab/dependency.hpp"
#include "comblab/graph.hpp"
#include "comblab/median_order.hpp"
#include "comblab/recognition.hpp"

namespace comblab {

/// Records how every missing edge of the input was oriented: phase 1 walks
/// the dependency-digraph paths over matching edges, phase 2 assigns
/// convenient orientations to the residual threshold part.
struct CompletionTrace {
  std::vector<std::pair<int, int>> path_arcs;      // phase 1, in path order
  std::vector<std::pair<int, int>> residual_arcs;  // phase 2, canonical order
  std::vector<std::pair<int, int>> added_arcs;     // both phases, in order
};

struct CaseLabel {
  enum Kind { Whole, InM, InY, InYNext, InYLast, InAOrX } kind = Whole;
  int level = 0;        // 1-based t for InM / InY
  bool matched_toward_feed = false;  // orientation of the feed's matching edge in D'
  bool terminal = false;             // feed's path node is the path's last node
  std::string to_string() const;
};

struct SNPCertificate {
  int feed = -1;
  OrientedGraph tournament;
  MedianOrder order;
  CompletionTrace trace;
  int d_plus = 0;       // out-degree of feed in the input
  int d_plus_plus = 0;  // second out-degree of feed in the input
  std::optional<CaseLabel> case_label;
};

struct ReorientationCertificate {
  std::vector<std::pair<int, int>> reversed_arcs;
  bool order_still_valid = false;
  bool feed_has_snp = false;
  bool ok() const { return order_still_valid && feed_has_snp; }
};

struct snp_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Phase 1: orient the matching edges along each maximal dependency path,
/// alternating from the head's convenient orientation.
std::pair<OrientedGraph, CompletionTrace> orient_delta_paths(const OrientedGraph& d,
                                                             const CombDecomposition& dec);

/// Phase 2: give every remaining missing edge a convenient orientation
/// (computed against the fixed input, ties broken (min,max)).
std::pair<OrientedGraph, CompletionTrace> complete_to_tournament(const OrientedGraph& d_prime);

/// Full pipeline; throws snp_error when the missing graph is not a comb and
/// reports a falsification candidate if the certificate fails verification.
SNPCertificate find_snp_vertex(const OrientedGraph& d);

CaseLabel classify_feed_case(const OrientedGraph& d, const OrientedGraph& d_prime,
                             const CombDecomposition& dec, const VertexSet& whole, int feed);

/// Audit step mirroring the proof: reverse completed missing-edge arcs
/// incident to the feed toward it (keeping the feed's own matching arc in the
/// non-terminal subcases) and check the order stays valid and the feed keeps
/// the SNP.
ReorientationCertificate reorientation_certificate(const OrientedGraph& d,
                                                   const SNPCertificate& cert,
                                                   const CombDecomposition& dec);

}  // namespace comblab
