#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "comblab/graph.hpp"
#include "comblab/patterns.hpp"

namespace comblab {

struct SplitPartition {
  VertexSet stable;  // S
  VertexSet clique;  // K
};

/// Block structure of a comb (Definition-style layered split graph).
/// Indexing: A[i] = A_i for i = 0..n; x_tail[j] = X_{j+2} for j = 0..n-1,
/// with X_1 identified with Y[0]; M[i] = M_{i+1}; Y[i] = Y_{i+1} so the Y
/// vector has l+2 entries. matching holds (m, y) pairs across all levels.
/// stripped records isolated vertices removed before decomposing.
struct CombDecomposition {
  std::vector<VertexSet> A;
  std::vector<VertexSet> x_tail;
  std::vector<VertexSet> M;
  std::vector<VertexSet> Y;
  int k0 = 0;  // 0 encodes "clause 8 vacuous" (l = 0 or Y_{l+1} empty)
  std::vector<std::pair<int, int>> matching;
  VertexSet stripped;

  int chain_length() const { return static_cast<int>(x_tail.size()); }  // n
  int levels() const { return static_cast<int>(M.size()); }             // l

  bool empty() const { return A.empty() && Y.empty(); }

  VertexSet stable_side() const;  // A u M
  VertexSet clique_side() const;  // X u Y
  VertexSet covered() const;      // all block vertices

  /// Index of the M level containing v, or -1.
  int m_level_of(int v) const;
  /// Index i such that Y[i] contains v (0-based, so Y_{i+1}), or -1.
  int y_index_of(int v) const;
};

struct CombValidation {
  std::vector<int> violated;  // clause numbers, ascending, deduplicated
  bool ok() const { return violated.empty(); }
};

struct SKCDecomposition {
  VertexSet S, K, C;
  CombDecomposition comb;  // decomposition of G[S u K], original indices
};

/// Elimination procedure: repeatedly delete an isolated or universal vertex.
bool is_threshold(const Graph& g);

/// Valid split partition maximizing |K|, ties broken by lexicographically
/// smallest K; nullopt if g is not split.
std::optional<SplitPartition> split_partition(const Graph& g);

std::optional<CombDecomposition> find_comb_decomposition(const Graph& g);

CombValidation validate_comb_decomposition(const Graph& g, const CombDecomposition& dec);

/// g minus all matching edges of the decomposition; threshold by construction.
Graph comb_residual(const Graph& g, const CombDecomposition& dec);

std::optional<SKCDecomposition> skc_decompose(const Graph& g);

}  // namespace comblab
