#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "orientgen/graph.hpp"
#include "orientgen/hypergraph.hpp"

namespace orientgen::corpus {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // centre is vertex leaves+1
Graph empty_graph(int n);
// 2k-cycle v1..v2k plus the chords among even vertices.
Graph complete_sun(int k);

Digraph transitive_tournament(int n);

// One representative per isomorphism class, n <= 6.
std::vector<Graph> graphs_up_to_iso(int n);
std::vector<Graph> chordal_graphs_up_to_iso(int n);

// Each new vertex attaches to a random clique of the current graph, then labels get shuffled.
Graph random_chordal_graph(std::mt19937_64& rng, int n, double attach_bias = 0.7);
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

// ([4], {12, 123, 1234})
Hypergraph nested_example();
// prefixes [i] plus all singletons
Hypergraph stanley_pitman(int n);
Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m);
// Fixed instances plus seeded random ones with n <= 5 and at most 8 hyperedges.
std::vector<Hypergraph> hypergraph_corpus(std::uint64_t seed, int random_count);

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

}  // namespace orientgen::corpus
