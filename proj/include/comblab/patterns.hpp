#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comblab/graph.hpp"

namespace comblab {
namespace patterns {

Graph path(int n);   // P_n
Graph cycle(int n);  // C_n

Graph c4();
Graph two_k2();  // complement of C4
Graph c5();
Graph p4();
Graph chair();     // vertices {x,y,z,t,v}=0..4, edges 01,12,23,24
Graph co_chair();  // complement of chair

}  // namespace patterns

/// Injective map realizing pattern as an induced subgraph of g, or nullopt.
/// result[i] = image of pattern vertex i; lexicographically smallest image tuple.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);

enum class PatternFamily { Threshold, Comb, CombC5Ok };

PatternFamily parse_family(const std::string& name);
const std::vector<Graph>& family_patterns(PatternFamily f);

/// True iff no pattern of the family occurs as an induced subgraph of g.
bool forbidden_free(const Graph& g, PatternFamily f);

}  // namespace comblab
