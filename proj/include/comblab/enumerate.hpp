#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "comblab/graph.hpp"
#include "comblab/recognition.hpp"

namespace comblab {

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2); n <= 11.
uint64_t labeled_graph_count(int n);

/// Graph for an edge-mask index; bit order is (0,1),(0,2)...(u,v) with u<v lex.
Graph graph_from_mask(int n, uint64_t mask);

/// Pairs missing from g in canonical order; orienting them yields the
/// oriented graphs missing g.
std::vector<std::pair<int, int>> complement_pairs(const Graph& g);

/// Orientation of the complement of g selected by mask bits (0: low->high).
OrientedGraph orientation_from_mask(const Graph& g, uint64_t mask);

/// Canonical edge mask: minimum mask over all vertex relabelings; n <= 8.
uint64_t canonical_form(const Graph& g);

/// One representative per isomorphism class, in canonical-mask order.
std::vector<Graph> nonisomorphic_graphs(int n);

Graph random_graph(int n, std::mt19937_64& rng);
OrientedGraph random_oriented(int n, std::mt19937_64& rng);  // each pair: ->, <-, missing
OrientedGraph random_tournament(int n, std::mt19937_64& rng);
OrientedGraph random_orientation_of_complement(const Graph& g, std::mt19937_64& rng);

/// Random comb built from a random block structure (always a valid comb with
/// no isolated vertices, up to `max_n` vertices, at least 2).
Graph random_comb(int max_n, std::mt19937_64& rng);

}  // namespace comblab
