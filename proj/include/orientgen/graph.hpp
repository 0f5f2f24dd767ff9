#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orientgen/common.hpp"

namespace orientgen {

struct Arc {
    int from = 0;
    int to = 0;
    auto operator<=>(const Arc&) const = default;
};

// Stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on 1..n. Edge order is insertion order; it fixes
// the bit layout of orientation masks.
class Graph {
   public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<int, int>> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int i, int j) const { return index_[idx(i, j)] >= 0; }
    int edge_index(int i, int j) const { return index_[idx(i, j)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    void add_edge(int i, int j);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.index_ == b.index_ && a.edges_ == b.edges_;
    }

   private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (n_ + 1) + j; }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_ = std::vector<std::vector<int>>(1);
    std::vector<int> index_ = std::vector<int>(1, -1);
};

// Dense 0/1 arc matrix, 1-based.
class Digraph {
   public:
    explicit Digraph(int n = 0);
    Digraph(int n, std::span<const Arc> arcs);

    int n() const { return n_; }
    int arc_count() const { return arcs_; }
    bool has_arc(int i, int j) const { return a_[idx(i, j)] != 0; }
    void add_arc(int i, int j);
    void remove_arc(int i, int j);
    // Replace i->j by j->i. No acyclicity check.
    void reverse_arc(int i, int j);

    std::vector<Arc> arcs() const;  // lexicographic
    std::vector<int> out_neighbors(int v) const;
    std::vector<int> in_neighbors(int v) const;
    int in_degree(int v) const;
    int out_degree(int v) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

   private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * (n_ + 1) + j; }

    int n_ = 0;
    int arcs_ = 0;
    std::vector<std::uint8_t> a_ = std::vector<std::uint8_t>(1, 0);
};

bool is_acyclic(const Digraph& d);
// Vertices in a topological order; throws InvalidInput on a cycle.
std::vector<int> topological_order(const Digraph& d);
// reach[i*(n+1)+j] != 0 iff a directed path i ~> j of length >= 1 exists.
std::vector<std::uint8_t> reachability(const Digraph& d);

std::vector<Arc> transitive_reduction(const Digraph& d);
std::vector<Arc> flippable_arcs(const Digraph& d);
Digraph flip_arc(const Digraph& d, Arc a);
std::vector<int> in_degree_sequence(const Digraph& d);

Graph underlying_graph(const Digraph& d);
Digraph induced_subdigraph(const Digraph& d, std::span<const int> vertices);

// Bit e of the mask set means edge e = {u<v} is oriented v->u.
Digraph orient(const Graph& g, Mask flipped);
Mask orientation_mask(const Graph& g, const Digraph& d);
// Orient each edge towards the vertex appearing later in the linear order.
Digraph orient_by_order(const Graph& g, std::span<const int> linear_order);

bool is_simplicial(const Graph& g, int v);

struct PeoOrder {
    // order[k-1] is the vertex that receives label k.
    std::vector<int> order;
};

// Old/new label translation for a vertex order.
struct Relabeling {
    std::vector<int> old_of_new;  // index 1..n
    std::vector<int> new_of_old;  // index 1..n

    static Relabeling from_order(std::span<const int> order);
    static Relabeling identity(int n);
};

Graph relabel(const Graph& g, const Relabeling& r);
Digraph relabel(const Digraph& d, const Relabeling& r);

// True iff vertex i is simplicial in G restricted to [i], for all i.
bool is_perfect_elimination_order(const Graph& g);
bool is_perfect_elimination_order(const Graph& g, std::span<const int> order);

// Lex-BFS, then the parent check. Empty iff g is not chordal.
std::optional<PeoOrder> find_peo(const Graph& g);

}  // namespace orientgen
