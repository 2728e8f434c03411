#include "comblab/median_order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace comblab {

namespace {

void require_permutation(const OrientedGraph& d, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != d.size())
    throw std::invalid_argument("order is not a permutation");
  std::vector<bool> seen(d.size(), false);
  for (int v : order) {
    if (v < 0 || v >= d.size() || seen[v])
      throw std::invalid_argument("order is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

int count_forward_arcs(const OrientedGraph& d, const std::vector<int>& order) {
  int fwd = 0;
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j)
      if (d.has_arc(order[i], order[j])) ++fwd;
  return fwd;
}

std::optional<FeedbackViolation> feedback_violation(const OrientedGraph& d,
                                                    const std::vector<int>& order) {
  require_permutation(d, order);
  int n = d.size();
  for (int i = 1; i <= n; ++i) {
    int vi = order[i - 1];
    int dplus = 0, dminus = 0;
    VertexSet interval(n);
    interval.set(vi);
    for (int j = i; j <= n; ++j) {
      int vj = order[j - 1];
      if (j > i) {
        interval.set(vj);
        if (d.has_arc(vi, vj)) ++dplus;
        if (d.has_arc(vj, vi)) ++dminus;
      }
      if (dplus < dminus) return FeedbackViolation{i, j, true};
      int jplus = (d.out_neighbors(vj) & interval).count();
      int jminus = (d.in_neighbors(vj) & interval).count();
      if (jminus < jplus) return FeedbackViolation{i, j, false};
    }
  }
  return std::nullopt;
}

namespace {

/// First violation in repair scan order: smallest i, then largest j.
std::optional<FeedbackViolation> repair_scan(const OrientedGraph& d,
                                             const std::vector<int>& order) {
  int n = d.size();
  for (int i = 1; i <= n; ++i) {
    int vi = order[i - 1];
    for (int j = n; j >= i; --j) {
      VertexSet interval(n);
      for (int p = i; p <= j; ++p) interval.set(order[p - 1]);
      int dplus = (d.out_neighbors(vi) & interval).count();
      int dminus = (d.in_neighbors(vi) & interval).count();
      if (dplus < dminus) return FeedbackViolation{i, j, true};
      int vj = order[j - 1];
      int jplus = (d.out_neighbors(vj) & interval).count();
      int jminus = (d.in_neighbors(vj) & interval).count();
      if (jminus < jplus) return FeedbackViolation{i, j, false};
    }
  }
  return std::nullopt;
}

}  // namespace

MedianOrder local_median_order(const OrientedGraph& d, const std::vector<int>* init) {
  std::vector<int> order;
  if (init) {
    require_permutation(d, *init);
    order = *init;
  } else {
    order.resize(d.size());
    std::iota(order.begin(), order.end(), 0);
  }
  while (auto v = repair_scan(d, order)) {
    int i = v->i - 1, j = v->j - 1;
    if (v->at_left) {
      // move v_i to position j; each such move strictly gains forward arcs
      std::rotate(order.begin() + i, order.begin() + i + 1, order.begin() + j + 1);
    } else {
      std::rotate(order.begin() + i, order.begin() + j, order.begin() + j + 1);
    }
  }
  return MedianOrder{order, count_forward_arcs(d, order)};
}

int feed_vertex(const MedianOrder& m) {
  if (m.order.empty()) throw std::invalid_argument("empty order");
  return m.order.back();
}

OrientedGraph reverse_arc(const OrientedGraph& d, int u, int v) {
  if (!d.has_arc(u, v)) throw std::invalid_argument("arc not present");
  OrientedGraph r = d;
  r.remove_arc(u, v);
  r.add_arc(v, u);
  return r;
}

std::vector<int> max_forward_order_oracle(const OrientedGraph& d) {
  int n = d.size();
  if (n > 20) throw std::invalid_argument("oracle limited to n <= 20");
  if (n == 0) return {};
  std::vector<uint32_t> in_mask(n, 0);
  for (int v = 0; v < n; ++v)
    d.in_neighbors(v).for_each([&](int u) { in_mask[v] |= 1u << u; });

  std::vector<int> best(size_t{1} << n, 0);
  for (uint32_t s = 1; s < (1u << n); ++s) {
    int b = -1;
    for (int v = 0; v < n; ++v) {
      if (!(s & (1u << v))) continue;
      int cand = best[s ^ (1u << v)] + std::popcount(in_mask[v] & (s ^ (1u << v)));
      if (cand > b) b = cand;
    }
    best[s] = b;
  }
  std::vector<int> order(n);
  uint32_t s = (n == 32) ? ~0u : ((1u << n) - 1);
  for (int pos = n - 1; pos >= 0; --pos) {
    for (int v = 0; v < n; ++v) {
      if (!(s & (1u << v))) continue;
      uint32_t rest = s ^ (1u << v);
      if (best[rest] + std::popcount(in_mask[v] & rest) == best[s]) {
        order[pos] = v;
        s = rest;
        break;
      }
    }
  }
  return order;
}

}  // namespace comblab
