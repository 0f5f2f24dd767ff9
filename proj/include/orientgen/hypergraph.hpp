#pragma once

#include <compare>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orientgen/graph.hpp"
#include "orientgen/permutation.hpp"

namespace orientgen {

// Vertex v is bit v of a Mask, so n <= 63.
class Hypergraph {
   public:
    static constexpr int kMaxVertices = 63;

    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<int>> edges);
    Hypergraph(int n, std::span<const Mask> masks);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& edge(int e) const { return edges_[e]; }
    Mask mask(int e) const { return masks_[e]; }
    const std::vector<Mask>& masks() const { return masks_; }
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    int max_degree() const { return max_degree_; }
    int find_edge(Mask m) const;
    int max_vertex(int e) const { return edges_[e].back(); }

   private:
    int n_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<int>> edges_;
    std::vector<Mask> masks_;
    std::vector<std::vector<int>> incident_ = std::vector<std::vector<int>>(1);
    std::unordered_map<Mask, int> index_;
};

struct HyperOrientation {
    std::vector<int> heads;  // by hyperedge index
    auto operator<=>(const HyperOrientation&) const = default;
};

struct HyperOrientationHash {
    std::size_t operator()(const HyperOrientation& o) const noexcept;
};

struct OrientationPoset {
    int n = 0;
    std::vector<Mask> above;     // above[i]: all j with i < j
    std::vector<Mask> cover_up;  // j covering i
    std::vector<Arc> covers;     // (i, j) with j covering i, lexicographic

    bool less(int i, int j) const { return (above[i] & bit(j)) != 0; }
};

Hypergraph hypergraph_from_graph(const Graph& g);
Hypergraph relabel(const Hypergraph& h, const Relabeling& r);

bool is_valid_orientation(const Hypergraph& h, const HyperOrientation& o);
// Every hyperedge headed at its largest vertex.
HyperOrientation max_orientation(const Hypergraph& h);
// Throws InvalidInput when two hyperedges produce opposite arcs.
Digraph orientation_digraph(const Hypergraph& h, const HyperOrientation& o);
bool is_acyclic_orientation(const Hypergraph& h, const HyperOrientation& o);
OrientationPoset poset_of(const Hypergraph& h, const HyperOrientation& o);

// Reassign heads j -> i on hyperedges containing i. No acyclicity check.
HyperOrientation pair_flip_raw(const Hypergraph& h, const HyperOrientation& o, int i, int j);
std::optional<HyperOrientation> pair_flip(const Hypergraph& h, const HyperOrientation& o, int i, int j);
std::vector<Arc> flippable_pairs(const Hypergraph& h, const HyperOrientation& o);

// Hyperedges inside [i], input order kept.
Hypergraph restrict(const Hypergraph& h, int i);
std::vector<int> restricted_edges(const Hypergraph& h, int i);
HyperOrientation restrict_orientation(const Hypergraph& h, const HyperOrientation& o, int i);

// Condition (i) for vertex v among hyperedges inside `alive`.
bool heo_condition(const Hypergraph& h, int v, Mask alive);
bool is_heo(const Hypergraph& h);
bool is_heo(const Hypergraph& h, std::span<const int> order);
std::optional<std::vector<int>> find_heo(const Hypergraph& h);

bool check_unique_parent_child(const Hypergraph& h, std::size_t cap = kDefaultCap);

bool is_building_set(const Hypergraph& h);
bool is_chordal_building_set(const Hypergraph& h);
// Connected vertex subsets in increasing mask order.
Hypergraph graphical_building_set(const Graph& g, std::size_t cap = kDefaultHyperedgeCap);

HyperOrientation orientation_from_permutation(const Hypergraph& h, const Permutation& pi);
std::vector<int> in_degree_sequence(const Hypergraph& h, const HyperOrientation& o);

struct ElimForest {
    std::vector<int> parent;  // parent[v], 0 for a root; index 0 unused
    auto operator<=>(const ElimForest&) const = default;
};

ElimForest orientation_to_elim_forest(const Hypergraph& bg, const HyperOrientation& o);
HyperOrientation elim_forest_to_orientation(const Hypergraph& bg, const ElimForest& f);

}  // namespace orientgen
