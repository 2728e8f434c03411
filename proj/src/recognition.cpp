#include "comblab/recognition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace comblab {

VertexSet CombDecomposition::stable_side() const {
  VertexSet acc(stripped.universe());
  for (const auto& b : A) acc |= b;
  for (const auto& b : M) acc |= b;
  return acc;
}

VertexSet CombDecomposition::clique_side() const {
  VertexSet acc(stripped.universe());
  for (const auto& b : x_tail) acc |= b;
  for (const auto& b : Y) acc |= b;
  return acc;
}

VertexSet CombDecomposition::covered() const { return stable_side() | clique_side(); }

int CombDecomposition::m_level_of(int v) const {
  for (size_t i = 0; i < M.size(); ++i)
    if (M[i].test(v)) return static_cast<int>(i);
  return -1;
}

int CombDecomposition::y_index_of(int v) const {
  for (size_t i = 0; i < Y.size(); ++i)
    if (Y[i].test(v)) return static_cast<int>(i);
  return -1;
}

bool is_threshold(const Graph& g) {
  int n = g.size();
  VertexSet alive = VertexSet::full(n);
  int remaining = n;
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!alive.test(v)) continue;
      int d = (g.neighbors(v) & alive).count();
      if (d == 0 || d == remaining - 1) pick = v;
    }
    if (pick < 0) return false;
    alive.reset(pick);
    --remaining;
  }
  return true;
}

namespace {

bool is_split(const Graph& g) {
  return !find_induced(g, patterns::two_k2()) && !find_induced(g, patterns::c4()) &&
         !find_induced(g, patterns::c5());
}

bool find_clique_with_stable_rest(const Graph& g, int m, int next, std::vector<int>& cur,
                                  VertexSet& cur_set) {
  if (static_cast<int>(cur.size()) == m) {
    VertexSet rest = VertexSet::full(g.size()) - cur_set;
    return g.is_stable(rest);
  }
  for (int v = next; v < g.size(); ++v) {
    if (g.size() - v < m - static_cast<int>(cur.size())) break;
    bool adj_all = true;
    for (int u : cur)
      if (!g.adjacent(u, v)) {
        adj_all = false;
        break;
      }
    if (!adj_all) continue;
    cur.push_back(v);
    cur_set.set(v);
    if (find_clique_with_stable_rest(g, m, v + 1, cur, cur_set)) return true;
    cur_set.reset(v);
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<SplitPartition> split_partition(const Graph& g) {
  if (!is_split(g)) return std::nullopt;
  int n = g.size();
  for (int m = n; m >= 0; --m) {
    std::vector<int> cur;
    VertexSet cur_set(n);
    if (find_clique_with_stable_rest(g, m, 0, cur, cur_set))
      return SplitPartition{VertexSet::full(n) - cur_set, cur_set};
  }
  return std::nullopt;
}

namespace {

// ---- comb decomposition search ----------------------------------------

std::vector<std::vector<int>> encode_blocks(const CombDecomposition& d) {
  std::vector<std::vector<int>> key;
  key.push_back({d.levels(), d.k0, d.chain_length()});
  for (const auto& b : d.A) key.push_back(b.to_vector());
  for (const auto& b : d.x_tail) key.push_back(b.to_vector());
  for (const auto& b : d.M) key.push_back(b.to_vector());
  for (const auto& b : d.Y) key.push_back(b.to_vector());
  std::vector<std::pair<int, int>> m = d.matching;
  std::sort(m.begin(), m.end());
  for (auto [a, b] : m) key.push_back({a, b});
  return key;
}

struct SearchState {
  const Graph* g = nullptr;
  VertexSet stripped;
  std::optional<CombDecomposition> best;
  std::vector<std::vector<int>> best_key;

  void offer(CombDecomposition dec) {
    dec.stripped = stripped;
    if (!validate_comb_decomposition(*g, dec).ok()) return;
    auto key = encode_blocks(dec);
    if (!best || key < best_key) {
      best_key = std::move(key);
      best = std::move(dec);
    }
  }
};

/// A/X chain from the A-vertices' neighborhoods restricted to the X side.
/// Neighborhood prefixes must form a strict inclusion chain.
bool build_chain(const Graph& g, const VertexSet& a_set, const VertexSet& xt,
                 const VertexSet& y_all, std::vector<VertexSet>& a_blocks,
                 std::vector<VertexSet>& x_tail_blocks) {
  int n = g.size();
  a_blocks.clear();
  x_tail_blocks.clear();
  if (a_set.empty()) {
    if (!xt.empty()) return false;
    a_blocks.push_back(VertexSet(n));  // A_0 empty, chain of length 0
    return true;
  }
  std::map<std::vector<int>, VertexSet> groups;
  bool ok = true;
  a_set.for_each([&](int a) {
    if (!ok) return;
    const VertexSet& nb = g.neighbors(a);
    if (!y_all.subset_of(nb)) {
      ok = false;
      return;
    }
    VertexSet p = nb - y_all;
    if (!p.subset_of(xt)) {
      ok = false;
      return;
    }
    auto [it, fresh] = groups.try_emplace(p.to_vector(), VertexSet(n));
    it->second.set(a);
  });
  if (!ok) return false;

  std::vector<std::pair<VertexSet, VertexSet>> chain;  // (P, group)
  for (auto& [pv, grp] : groups) {
    VertexSet p(n);
    for (int v : pv) p.set(v);
    chain.emplace_back(std::move(p), grp);
  }
  std::sort(chain.begin(), chain.end(),
            [](const auto& a, const auto& b) { return a.first.count() < b.first.count(); });
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    if (!(chain[i].first.count() < chain[i + 1].first.count()) ||
        !chain[i].first.subset_of(chain[i + 1].first))
      return false;
  if (!chain.front().first.empty()) return false;  // A_1 would be empty

  if (chain.size() == 1 && xt.empty()) {
    // star-like: A_0 carries everything, chain length 0
    a_blocks.push_back(chain.front().second);
    return true;
  }
  int t = static_cast<int>(chain.size());
  a_blocks.push_back(VertexSet(n));  // A_0 = empty
  for (int i = 0; i < t; ++i) a_blocks.push_back(chain[i].second);
  for (int j = 1; j < t; ++j) x_tail_blocks.push_back(chain[j].first - chain[j - 1].first);
  x_tail_blocks.push_back(xt - chain.back().first);  // X_{n+1}
  return true;
}

/// Given the M level partition, derive the Y levels, Y_{l+1}/k0, Y_{l+2} and
/// the A/X chain; every consistent labeling is offered to the state.
void derive_from_levels(SearchState& st, const VertexSet& s_set, const VertexSet& k_set,
                        const VertexSet& m_all, const std::vector<VertexSet>& m_levels) {
  const Graph& g = *st.g;
  int n = g.size();
  int l = static_cast<int>(m_levels.size());

  // candidate vertices per Y level: exactly one neighbor in M_i, all of M_j
  // (j<i), none of M_j (j>i)
  std::vector<std::vector<int>> cands(l);
  std::vector<int> kv = k_set.to_vector();
  for (int y : kv) {
    VertexSet nb = g.neighbors(y);
    for (int i = 0; i < l; ++i) {
      if ((nb & m_levels[i]).count() != 1) continue;
      bool fit = true;
      for (int j = 0; j < i && fit; ++j)
        if (!m_levels[j].subset_of(nb)) fit = false;
      for (int j = i + 1; j < l && fit; ++j)
        if (nb.intersects(m_levels[j])) fit = false;
      if (fit) cands[i].push_back(y);
    }
  }
  for (int i = 0; i < l; ++i)
    if (static_cast<int>(cands[i].size()) < m_levels[i].count()) return;

  // choose |M_i| candidates per level (usually forced)
  std::vector<VertexSet> y_levels(l, VertexSet(n));
  std::function<void(int)> choose = [&](int lvl) {
    if (lvl == l) {
      // perfect matchings per level
      std::vector<std::pair<int, int>> matching;
      for (int i = 0; i < l; ++i) {
        bool ok = true;
        m_levels[i].for_each([&](int m) {
          VertexSet hit = g.neighbors(m) & y_levels[i];
          if (hit.count() != 1) {
            ok = false;
            return;
          }
          matching.emplace_back(m, hit.to_vector()[0]);
        });
        if (!ok) return;
      }
      VertexSet y_used(n);
      for (const auto& yl : y_levels) y_used |= yl;

      // Y_{l+1}: leftover clique vertices with M neighbors; all must see the
      // same prefix M_1..M_{k0}
      VertexSet y_next(n);
      int k0 = 0;
      for (int y : kv) {
        if (y_used.test(y)) continue;
        if (g.neighbors(y).intersects(m_all)) y_next.set(y);
      }
      if (!y_next.empty()) {
        VertexSet seen(n);
        bool first = true;
        bool same = true;
        y_next.for_each([&](int y) {
          VertexSet mm = g.neighbors(y) & m_all;
          if (first) {
            seen = mm;
            first = false;
          } else if (!(mm == seen)) {
            same = false;
          }
        });
        if (!same) return;
        VertexSet prefix(n);
        int kk = 0;
        while (kk < l) {
          if (prefix == seen) break;
          prefix |= m_levels[kk];
          ++kk;
        }
        if (!(prefix == seen)) return;
        if (kk == 0) return;  // no M neighbors contradiction
        k0 = kk;
      }

      VertexSet rest = k_set - y_used - y_next;
      VertexSet a_set = s_set - m_all;
      VertexSet y_last(n);
      if (a_set.empty()) {
        y_last = rest;
      } else {
        rest.for_each([&](int r) {
          if (a_set.subset_of(g.neighbors(r))) y_last.set(r);
        });
      }
      VertexSet xt = rest - y_last;

      VertexSet y_all = y_used | y_next | y_last;
      std::vector<VertexSet> a_blocks, x_tail;
      if (!build_chain(g, a_set, xt, y_all, a_blocks, x_tail)) return;

      CombDecomposition dec;
      dec.A = a_blocks;
      dec.x_tail = x_tail;
      dec.M = m_levels;
      dec.Y = y_levels;
      dec.Y.push_back(y_next);
      dec.Y.push_back(y_last);
      dec.k0 = k0;
      dec.matching = matching;
      st.offer(std::move(dec));
      return;
    }
    int need = m_levels[lvl].count();
    const auto& cs = cands[lvl];
    if (static_cast<int>(cs.size()) == need) {
      for (int y : cs) y_levels[lvl].set(y);
      choose(lvl + 1);
      y_levels[lvl] = VertexSet(n);
      return;
    }
    // enumerate size-|M_lvl| subsets of the candidates
    std::vector<int> idx(need);
    std::function<void(int, int)> comb = [&](int pos, int start) {
      if (pos == need) {
        for (int q = 0; q < need; ++q) y_levels[lvl].set(cs[idx[q]]);
        choose(lvl + 1);
        y_levels[lvl] = VertexSet(n);
        return;
      }
      for (int q = start; q <= static_cast<int>(cs.size()) - (need - pos); ++q) {
        idx[pos] = q;
        comb(pos + 1, q + 1);
      }
    };
    comb(0, 0);
  };
  choose(0);
}

/// Threshold-style labeling (no M levels).
void derive_l0(SearchState& st, const VertexSet& s_set, const VertexSet& k_set) {
  const Graph& g = *st.g;
  int n = g.size();
  VertexSet y1(n);
  if (s_set.empty()) {
    y1 = k_set;
  } else {
    k_set.for_each([&](int k) {
      if (s_set.subset_of(g.neighbors(k))) y1.set(k);
    });
  }
  if (y1.empty() && !k_set.empty()) return;
  if (y1.empty() && k_set.empty() && !s_set.empty()) return;  // stable graph w/o clique side
  VertexSet xt = k_set - y1;
  std::vector<VertexSet> a_blocks, x_tail;
  if (!build_chain(g, s_set, xt, y1, a_blocks, x_tail)) return;
  CombDecomposition dec;
  dec.A = a_blocks;
  dec.x_tail = x_tail;
  dec.Y = {y1, VertexSet(n)};  // Y_1, Y_2 empty
  dec.k0 = 0;
  st.offer(std::move(dec));
}

void enumerate_m_partitions(SearchState& st, const VertexSet& s_set, const VertexSet& k_set,
                            const VertexSet& m_all) {
  const Graph& g = *st.g;
  int n = g.size();
  std::vector<int> pool = m_all.to_vector();
  std::vector<VertexSet> levels;
  std::function<void(VertexSet)> rec = [&](VertexSet remaining) {
    if (remaining.empty()) {
      derive_from_levels(st, s_set, k_set, m_all, levels);
      return;
    }
    // next level = any nonempty subset of the remaining M vertices
    std::vector<int> rv = remaining.to_vector();
    int cnt = static_cast<int>(rv.size());
    for (uint32_t mask = 1; mask < (1u << cnt); ++mask) {
      VertexSet lvl(n);
      for (int b = 0; b < cnt; ++b)
        if (mask & (1u << b)) lvl.set(rv[b]);
      VertexSet rest = remaining - lvl;
      // prune: enough Y candidates must exist for this level
      int cand_count = 0;
      k_set.for_each([&](int y) {
        const VertexSet& nb = g.neighbors(y);
        if ((nb & lvl).count() != 1) return;
        for (const VertexSet& prev : levels)
          if (!prev.subset_of(nb)) return;
        if (nb.intersects(rest)) return;
        ++cand_count;
      });
      if (cand_count < lvl.count()) continue;
      levels.push_back(lvl);
      rec(rest);
      levels.pop_back();
    }
  };
  rec(m_all);
}

void enumerate_splits(SearchState& st, const std::vector<int>& verts, size_t idx, VertexSet& s_set,
                      VertexSet& k_set) {
  const Graph& g = *st.g;
  if (idx == verts.size()) {
    // Mset = every subset of S
    std::vector<int> sv = s_set.to_vector();
    int cnt = static_cast<int>(sv.size());
    if (cnt > 25) throw std::runtime_error("comb decomposition search too large");
    derive_l0(st, s_set, k_set);
    for (uint32_t mask = 1; mask < (1u << cnt); ++mask) {
      VertexSet m_all(g.size());
      for (int b = 0; b < cnt; ++b)
        if (mask & (1u << b)) m_all.set(sv[b]);
      enumerate_m_partitions(st, s_set, k_set, m_all);
    }
    return;
  }
  int v = verts[idx];
  if (!g.neighbors(v).intersects(s_set)) {
    s_set.set(v);
    enumerate_splits(st, verts, idx + 1, s_set, k_set);
    s_set.reset(v);
  }
  if (k_set.subset_of(g.neighbors(v))) {
    k_set.set(v);
    enumerate_splits(st, verts, idx + 1, s_set, k_set);
    k_set.reset(v);
  }
}

}  // namespace

std::optional<CombDecomposition> find_comb_decomposition(const Graph& g) {
  int n = g.size();
  if (!forbidden_free(g, PatternFamily::Comb)) return std::nullopt;

  VertexSet stripped(n);
  std::vector<int> verts;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0)
      stripped.set(v);
    else
      verts.push_back(v);
  }

  SearchState st;
  st.g = &g;
  st.stripped = stripped;

  if (verts.empty()) {
    CombDecomposition dec;
    dec.stripped = stripped;
    return dec;
  }

  VertexSet s_set(n), k_set(n);
  enumerate_splits(st, verts, 0, s_set, k_set);
  return st.best;
}

CombValidation validate_comb_decomposition(const Graph& g, const CombDecomposition& dec) {
  CombValidation res;
  auto flag = [&](int clause) {
    if (std::find(res.violated.begin(), res.violated.end(), clause) == res.violated.end())
      res.violated.push_back(clause);
  };
  int n = g.size();
  int l = dec.levels();
  int cn = dec.chain_length();

  if (dec.empty()) {
    // empty decomposition: legal only for a graph whose vertices are all stripped
    VertexSet want = dec.stripped;
    for (int v = 0; v < n; ++v)
      if (!want.test(v) || g.degree(v) != 0) {
        flag(1);
        break;
      }
    std::sort(res.violated.begin(), res.violated.end());
    return res;
  }

  if (static_cast<int>(dec.A.size()) != cn + 1 || static_cast<int>(dec.Y.size()) != l + 2) {
    flag(1);
    return res;
  }
  {
    bool universes_ok = dec.stripped.universe() == n;
    auto chk = [&](const std::vector<VertexSet>& bs) {
      for (const auto& b : bs)
        if (b.universe() != n) universes_ok = false;
    };
    chk(dec.A);
    chk(dec.x_tail);
    chk(dec.M);
    chk(dec.Y);
    for (auto [m, y] : dec.matching)
      if (m < 0 || y < 0 || m >= n || y >= n) universes_ok = false;
    if (!universes_ok) {
      flag(1);
      return res;
    }
  }

  // clause 1: blocks pairwise disjoint, cover V minus stripped
  {
    std::vector<const VertexSet*> all;
    for (const auto& b : dec.A) all.push_back(&b);
    for (const auto& b : dec.x_tail) all.push_back(&b);
    for (const auto& b : dec.M) all.push_back(&b);
    for (const auto& b : dec.Y) all.push_back(&b);
    VertexSet seen(n);
    for (const auto* b : all) {
      if (b->intersects(seen)) flag(1);
      seen |= *b;
    }
    if (seen.intersects(dec.stripped)) flag(1);
    if (!((seen | dec.stripped) == VertexSet::full(n))) flag(1);
    bool strip_ok = true;
    dec.stripped.for_each([&](int v) {
      if (g.degree(v) != 0) strip_ok = false;
    });
    if (!strip_ok) flag(1);
  }

  VertexSet s_side = dec.stable_side();
  VertexSet k_side = dec.clique_side();
  if (!g.is_stable(s_side)) flag(2);
  if (!g.is_clique(k_side)) flag(3);

  // clause 4: A_i complete to X_j for 1 <= j <= i <= n  (X_1 = Y_1)
  auto x_block = [&](int j) -> const VertexSet& {  // j is 1-based
    return j == 1 ? dec.Y[0] : dec.x_tail[j - 2];
  };
  for (int i = 1; i <= cn; ++i)
    for (int j = 1; j <= i; ++j) {
      bool ok = true;
      dec.A[i].for_each([&](int a) {
        if (!x_block(j).subset_of(g.neighbors(a))) ok = false;
      });
      if (!ok) flag(4);
    }

  // clause 5: A complete to Y
  {
    VertexSet y_all(n);
    for (const auto& b : dec.Y) y_all |= b;
    bool ok = true;
    for (const auto& ab : dec.A)
      ab.for_each([&](int a) {
        if (!y_all.subset_of(g.neighbors(a))) ok = false;
      });
    if (!ok) flag(5);
  }

  // clause 6: E[Y_i, M_i] is exactly the stored perfect matching
  {
    std::vector<std::pair<int, int>> match = dec.matching;
    bool ok = true;
    VertexSet m_seen(n), y_seen(n);
    for (auto [m, y] : match) {
      int lvl = dec.m_level_of(m);
      if (lvl < 0 || lvl >= l || !dec.Y[lvl].test(y) || !g.adjacent(m, y)) ok = false;
      if (m_seen.test(m) || y_seen.test(y)) ok = false;
      if (m >= 0 && m < n) m_seen.set(m);
      if (y >= 0 && y < n) y_seen.set(y);
    }
    for (int i = 0; i < l; ++i) {
      if (dec.M[i].count() != dec.Y[i].count()) ok = false;
      if (!dec.M[i].subset_of(m_seen) || !dec.Y[i].subset_of(y_seen)) ok = false;
      // no extra cross edges beyond the matching
      dec.M[i].for_each([&](int m) {
        if ((g.neighbors(m) & dec.Y[i]).count() != 1) ok = false;
      });
      dec.Y[i].for_each([&](int y) {
        if ((g.neighbors(y) & dec.M[i]).count() != 1) ok = false;
      });
    }
    if (!ok) flag(6);
  }

  // clause 7: M_i complete to Y_j for i < j <= l
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      bool ok = true;
      dec.M[i].for_each([&](int m) {
        if (!dec.Y[j].subset_of(g.neighbors(m))) ok = false;
      });
      if (!ok) flag(7);
    }

  // clause 8 (+10): Y_{l+1} complete to M_1..M_{k0}, no edges above
  {
    const VertexSet& ynext = dec.Y[l];  // Y_{l+1}
    if (dec.k0 < 0 || dec.k0 > l) flag(8);
    if (ynext.empty() || l == 0) {
      if (dec.k0 != 0) flag(8);
    } else {
      if (dec.k0 < 1) flag(8);
      for (int i = 0; i < l; ++i) {
        bool ok = true;
        dec.M[i].for_each([&](int m) {
          if (i < dec.k0) {
            if (!ynext.subset_of(g.neighbors(m))) ok = false;
          } else {
            if (g.neighbors(m).intersects(ynext)) ok = false;
          }
        });
        if (!ok) flag(8);
      }
    }
  }

  // clause 9: only X_{n+1}, Y_{l+2}, Y_{l+1}, A_0 may be empty
  {
    for (int i = 1; i <= cn; ++i)
      if (dec.A[i].empty()) flag(9);
    if (dec.Y[0].empty()) flag(9);  // X_1 = Y_1
    for (int j = 0; j + 1 < static_cast<int>(dec.x_tail.size()); ++j)
      if (dec.x_tail[j].empty()) flag(9);
    for (int i = 0; i < l; ++i)
      if (dec.M[i].empty() || dec.Y[i].empty()) flag(9);
  }

  // clause 10: no edges other than those mandated above
  {
    Graph allowed(n);
    std::vector<int> kv = k_side.to_vector();
    for (size_t i = 0; i < kv.size(); ++i)
      for (size_t j = i + 1; j < kv.size(); ++j) allowed.add_edge(kv[i], kv[j]);
    for (int i = 1; i <= cn; ++i)
      for (int j = 2; j <= i; ++j)
        dec.A[i].for_each([&](int a) {
          x_block(j).for_each([&](int x) { allowed.add_edge(a, x); });
        });
    VertexSet y_all(n);
    for (const auto& b : dec.Y) y_all |= b;
    for (const auto& ab : dec.A)
      ab.for_each([&](int a) { y_all.for_each([&](int y) { allowed.add_edge(a, y); }); });
    for (auto [m, y] : dec.matching)
      if (m != y && m >= 0 && y >= 0 && m < n && y < n) allowed.add_edge(m, y);
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        dec.M[i].for_each([&](int m) {
          dec.Y[j].for_each([&](int y) { allowed.add_edge(m, y); });
        });
    for (int i = 0; i < dec.k0 && i < l; ++i)
      dec.M[i].for_each([&](int m) {
        dec.Y[l].for_each([&](int y) { allowed.add_edge(m, y); });
      });
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!allowed.adjacent(u, v)) ok = false;
    if (!ok) flag(10);
  }

  std::sort(res.violated.begin(), res.violated.end());
  return res;
}

Graph comb_residual(const Graph& g, const CombDecomposition& dec) {
  if (!validate_comb_decomposition(g, dec).ok())
    throw std::invalid_argument("invalid comb decomposition");
  Graph r = g;
  for (auto [m, y] : dec.matching) r.remove_edge(m, y);
  return r;
}

std::optional<SKCDecomposition> skc_decompose(const Graph& g) {
  if (!forbidden_free(g, PatternFamily::CombC5Ok)) return std::nullopt;
  int n = g.size();
  VertexSet c_set(n);
  if (auto emb = find_induced(g, patterns::c5()))
    for (int v : *emb) c_set.set(v);

  // comb part on V - C, kept in original indices (C vertices isolated here)
  Graph rest(n);
  for (auto [u, v] : g.edges())
    if (!c_set.test(u) && !c_set.test(v)) rest.add_edge(u, v);
  auto dec = find_comb_decomposition(rest);
  if (!dec) return std::nullopt;

  VertexSet s_side = dec->stable_side() | (dec->stripped - c_set);
  VertexSet k_side = dec->clique_side();
  bool ok = true;
  c_set.for_each([&](int c) {
    if (!k_side.subset_of(g.neighbors(c))) ok = false;
    if (g.neighbors(c).intersects(s_side)) ok = false;
  });
  if (!ok) return std::nullopt;
  return SKCDecomposition{s_side, k_side, c_set, std::move(*dec)};
}

}  // namespace comblab
