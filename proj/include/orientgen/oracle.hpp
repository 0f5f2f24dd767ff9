#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orientgen/graph.hpp"
#include "orientgen/hypergraph.hpp"
#include "orientgen/permutation.hpp"

namespace orientgen::oracle {

// Acyclic orientation masks of g (bit layout of orient()), increasing.
std::vector<Mask> enumerate_ao_graph(const Graph& g, std::size_t cap = kDefaultCap, Exec exec = Exec::serial);
std::vector<Digraph> enumerate_ao_graph_digraphs(const Graph& g, std::size_t cap = kDefaultCap);
// Acyclic head assignments in lexicographic order.
std::vector<HyperOrientation> enumerate_ao_hyper(const Hypergraph& h, std::size_t cap = kDefaultCap,
                                                 Exec exec = Exec::serial);

struct FlipEdge {
    int u = 0;
    int v = 0;
    std::string label;
};

struct FlipGraph {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> adj;  // sorted
    std::vector<FlipEdge> edges;        // u < v

    int size() const { return static_cast<int>(labels.size()); }
    bool adjacent(int u, int v) const;
    int degree(int u) const { return static_cast<int>(adj[u].size()); }
};

// Adjacent iff one arc flip apart.
FlipGraph graph_flip_graph(const Graph& g, std::span<const Mask> orientations, Exec exec = Exec::serial);
// Adjacent iff some pair flip (by the defining formula) maps one to the other.
FlipGraph hyper_flip_graph(const Hypergraph& h, std::span<const HyperOrientation> orientations,
                           Exec exec = Exec::serial);

// Removal of the leftmost vertex roots a tree over its component, recursively.
ElimForest elim_forest_from_permutation(const Graph& g, const Permutation& pi);
struct RotationGraph {
    std::vector<ElimForest> forests;  // sorted
    FlipGraph graph;
};
// Forests adjacent iff realised by permutations one adjacent transposition apart.
RotationGraph rotation_graph(const Graph& g);

// Classes X < Y iff some x <= y (mask containment), then transitive reduction.
FlipGraph quotient_cover_graph(std::span<const Mask> elements, std::span<const int> class_of, int class_count);

// Definitional class checks: every induced subdigraph, every directed path,
// every choice of the last vertex. Exponential; small n only.
bool vertebrate_by_definition(const Digraph& d);
bool filled_by_definition(const Digraph& d);
bool peo_consistent_by_definition(const Digraph& d);

struct PathCertificate {
    bool ok = false;
    bool cyclic = false;
    std::string failure;
};

PathCertificate certify_hamilton_path(const FlipGraph& fg, std::span<const int> listing);

bool is_bipartite(const FlipGraph& fg);
std::vector<int> bfs_distances(const FlipGraph& fg, int source);
bool check_flip_distance(const FlipGraph& fg, std::span<const Mask> orientations, int a, int b);
// Every pair; the parallel version splits BFS sources across threads.
bool check_all_flip_distances(const FlipGraph& fg, std::span<const Mask> orientations, Exec exec = Exec::serial);

std::string to_dot(const FlipGraph& fg, std::span<const int> path = {});

}  // namespace orientgen::oracle
