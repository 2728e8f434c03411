#pragma once

#include <optional>
#include <vector>

#include "comblab/graph.hpp"

namespace comblab {

struct MedianOrder {
  std::vector<int> order;  // v_1..v_n
  int forward_arcs = 0;
};

struct FeedbackViolation {
  int i, j;          // 1-based interval endpoints
  bool at_left;      // true: d+(v_i) < d-(v_i) inside [i,j]; false: dual at v_j
};

/// First violated interval constraint (smallest i, then smallest j), or
/// nullopt when the order is a local median order.
std::optional<FeedbackViolation> feedback_violation(const OrientedGraph& d,
                                                    const std::vector<int>& order);

/// Repair local search from `init` (identity by default); result always
/// satisfies the feedback property.
MedianOrder local_median_order(const OrientedGraph& d,
                               const std::vector<int>* init = nullptr);

int feed_vertex(const MedianOrder& m);

OrientedGraph reverse_arc(const OrientedGraph& d, int u, int v);

/// Exact maximum-forward-arcs order by subset DP; n <= 20.
std::vector<int> max_forward_order_oracle(const OrientedGraph& d);

int count_forward_arcs(const OrientedGraph& d, const std::vector<int>& order);

}  // namespace comblab
