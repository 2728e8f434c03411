#include "comblab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace comblab {

uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > 11) throw std::invalid_argument("labeled enumeration limited to n <= 11");
  return uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_mask(int n, uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask & (uint64_t{1} << bit)) g.add_edge(u, v);
  return g;
}

std::vector<std::pair<int, int>> complement_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

OrientedGraph orientation_from_mask(const Graph& g, uint64_t mask) {
  auto pairs = complement_pairs(g);
  if (pairs.size() > 63) throw std::invalid_argument("too many pairs for mask orientation");
  OrientedGraph d(g.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (mask & (uint64_t{1} << i))
      d.add_arc(v, u);
    else
      d.add_arc(u, v);
  }
  return d;
}

namespace {

uint64_t edge_mask(const Graph& g) {
  uint64_t mask = 0;
  int bit = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v, ++bit)
      if (g.adjacent(u, v)) mask |= uint64_t{1} << bit;
  return mask;
}

}  // namespace

uint64_t canonical_form(const Graph& g) {
  int n = g.size();
  if (n > 8) throw std::invalid_argument("canonical form limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t mask = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (g.adjacent(perm[u], perm[v])) mask |= uint64_t{1} << bit;
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  std::map<uint64_t, Graph> reps;
  for (uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
    Graph g = graph_from_mask(n, mask);
    uint64_t c = canonical_form(g);
    reps.try_emplace(c, graph_from_mask(n, c));
  }
  std::vector<Graph> out;
  for (auto& [c, g] : reps) out.push_back(std::move(g));
  return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

OrientedGraph random_oriented(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> tri(0, 2);
  OrientedGraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      switch (tri(rng)) {
        case 0: d.add_arc(u, v); break;
        case 1: d.add_arc(v, u); break;
        default: break;
      }
    }
  return d;
}

OrientedGraph random_tournament(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  OrientedGraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng))
        d.add_arc(u, v);
      else
        d.add_arc(v, u);
    }
  return d;
}

OrientedGraph random_orientation_of_complement(const Graph& g, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  OrientedGraph d(g.size());
  for (auto [u, v] : complement_pairs(g)) {
    if (coin(rng))
      d.add_arc(u, v);
    else
      d.add_arc(v, u);
  }
  return d;
}

Graph random_comb(int max_n, std::mt19937_64& rng) {
  if (max_n < 2) throw std::invalid_argument("random_comb needs max_n >= 2");
  auto ri = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  for (;;) {
    int budget = max_n;
    int l = ri(0, 2);
    int chain = ri(0, 2);

    // block sizes; mandatory ones at least 1
    std::vector<int> m_sz(l), y_sz(l);
    std::vector<int> a_sz(chain + 1), x_sz(chain);  // a_sz[0]=A_0; x_sz: X_2..X_{n+1}
    int y1 = 1 + ri(0, 1);       // Y_1 = X_1
    int y_next = ri(0, 1);       // Y_{l+1}
    int y_last = ri(0, 1);       // Y_{l+2}
    for (int i = 0; i < l; ++i) m_sz[i] = y_sz[i] = 1 + ri(0, 1);
    for (int i = 1; i <= chain; ++i) a_sz[i] = 1 + ri(0, 1);
    a_sz[0] = ri(0, 1);
    for (int j = 0; j + 1 < chain; ++j) x_sz[j] = 1 + ri(0, 1);
    if (chain > 0) x_sz[chain - 1] = ri(0, 1);  // X_{n+1}

    int total = y1 + y_next + y_last;
    for (int i = 0; i < l; ++i) total += m_sz[i];
    for (int i = 1; i < l; ++i) total += y_sz[i];
    for (int i = 0; i <= chain; ++i) total += a_sz[i];
    for (int j = 0; j < chain; ++j) total += x_sz[j];
    if (total < 2 || total > budget) continue;

    // lay out vertex ranges
    int next = 0;
    auto take = [&](int k) {
      std::vector<int> vs(k);
      for (int i = 0; i < k; ++i) vs[i] = next++;
      return vs;
    };
    std::vector<std::vector<int>> A(chain + 1), Xt(chain), M(l), Y(l + 2);
    // Y_1 carries the level-1 matching, so it must match M_1 in size
    if (l >= 1 && y1 != m_sz[0]) continue;
    Y[0] = take(y1);
    for (int i = 0; i < l; ++i) M[i] = take(m_sz[i]);
    for (int i = 1; i < l; ++i) Y[i] = take(y_sz[i]);
    Y[l] = take(y_next);
    Y[l + 1] = take(y_last);
    for (int i = 0; i <= chain; ++i) A[i] = take(a_sz[i]);
    for (int j = 0; j < chain; ++j) Xt[j] = take(x_sz[j]);
    int n = next;

    int k0 = (l >= 1 && y_next > 0) ? ri(1, l) : 0;

    Graph g(n);
    std::vector<int> k_side;
    for (auto& b : Y)
      for (int v : b) k_side.push_back(v);
    for (auto& b : Xt)
      for (int v : b) k_side.push_back(v);
    for (size_t i = 0; i < k_side.size(); ++i)
      for (size_t j = i + 1; j < k_side.size(); ++j) g.add_edge(k_side[i], k_side[j]);
    // A complete to Y, and to X_2..X_i
    std::vector<int> y_all;
    for (auto& b : Y)
      for (int v : b) y_all.push_back(v);
    for (int i = 0; i <= chain; ++i)
      for (int a : A[i]) {
        for (int y : y_all) g.add_edge(a, y);
        for (int j = 0; j + 1 < i; ++j)  // X_{j+2} for j+2 <= i
          for (int x : Xt[j]) g.add_edge(a, x);
      }
    // matchings (random bijection per level)
    for (int i = 0; i < l; ++i) {
      std::vector<int> ys = Y[i];
      std::shuffle(ys.begin(), ys.end(), rng);
      for (size_t q = 0; q < M[i].size(); ++q) g.add_edge(M[i][q], ys[q]);
    }
    // M_i complete to Y_j for i < j <= l, and to Y_{l+1} when i < k0
    for (int i = 0; i < l; ++i)
      for (int m : M[i]) {
        for (int j = i + 1; j < l; ++j)
          for (int y : Y[j]) g.add_edge(m, y);
        if (i < k0)
          for (int y : Y[l]) g.add_edge(m, y);
      }

    // drop isolated vertices (combs are hereditary)
    VertexSet keep(n);
    for (int v = 0; v < n; ++v)
      if (g.degree(v) > 0) keep.set(v);
    if (keep.count() < 2) continue;
    return induced_subgraph(g, keep).first;
  }
}

}  // namespace comblab
