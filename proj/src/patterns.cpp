#include "comblab/patterns.hpp"

#include <stdexcept>

namespace comblab {
namespace patterns {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph c4() { return cycle(4); }

Graph two_k2() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  return g;
}

Graph c5() { return cycle(5); }

Graph p4() { return path(4); }

Graph chair() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  return g;
}

Graph co_chair() { return complement(chair()); }

}  // namespace patterns

namespace {

bool extend(const Graph& g, const Graph& p, std::vector<int>& image, std::vector<bool>& used) {
  int k = static_cast<int>(image.size());
  if (k == p.size()) return true;
  for (int cand = 0; cand < g.size(); ++cand) {
    if (used[cand]) continue;
    if (g.degree(cand) < p.degree(k)) continue;
    bool ok = true;
    for (int j = 0; j < k; ++j) {
      if (g.adjacent(image[j], cand) != p.adjacent(j, k)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image.push_back(cand);
    used[cand] = true;
    if (extend(g, p, image, used)) return true;
    used[cand] = false;
    image.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern) {
  if (pattern.size() > g.size()) return std::nullopt;
  std::vector<int> image;
  std::vector<bool> used(g.size(), false);
  if (extend(g, pattern, image, used)) return image;
  return std::nullopt;
}

PatternFamily parse_family(const std::string& name) {
  if (name == "THRESHOLD" || name == "threshold") return PatternFamily::Threshold;
  if (name == "COMB" || name == "comb") return PatternFamily::Comb;
  if (name == "COMB_C5OK" || name == "comb-c5ok") return PatternFamily::CombC5Ok;
  throw std::invalid_argument("unknown pattern family: " + name);
}

const std::vector<Graph>& family_patterns(PatternFamily f) {
  using namespace patterns;
  static const std::vector<Graph> threshold = {c4(), two_k2(), p4()};
  static const std::vector<Graph> comb = {c4(), two_k2(), c5(), chair(), co_chair()};
  static const std::vector<Graph> comb_c5ok = {c4(), two_k2(), chair(), co_chair()};
  switch (f) {
    case PatternFamily::Threshold: return threshold;
    case PatternFamily::Comb: return comb;
    case PatternFamily::CombC5Ok: return comb_c5ok;
  }
  throw std::logic_error("bad family");
}

bool forbidden_free(const Graph& g, PatternFamily f) {
  for (const Graph& p : family_patterns(f))
    if (find_induced(g, p)) return false;
  return true;
}

}  // namespace comblab
