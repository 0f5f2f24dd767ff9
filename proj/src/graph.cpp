#include "orientgen/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace orientgen {

std::size_t cap_from_env(std::size_t fallback) {
    const char* s = std::getenv("ORIENTGEN_CAP");
    if (s == nullptr || *s == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) return fallback;
    return static_cast<std::size_t>(v);
}

Graph::Graph(int n)
    : n_(n),
      adj_(static_cast<std::size_t>(n) + 1),
      index_(static_cast<std::size_t>(n + 1) * (n + 1), -1) {
    if (n < 0) throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
}

void Graph::add_edge(int i, int j) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw InvalidInput("edge endpoint out of range: " + std::to_string(i) + " " + std::to_string(j));
    if (i == j) throw InvalidInput("self-loop at vertex " + std::to_string(i));
    if (adjacent(i, j)) throw InvalidInput("duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    int e = edge_count();
    edges_.push_back({std::min(i, j), std::max(i, j)});
    index_[idx(i, j)] = e;
    index_[idx(j, i)] = e;
    auto ins = [](std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); };
    ins(adj_[i], j);
    ins(adj_[j], i);
}

Digraph::Digraph(int n) : n_(n), a_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {
    if (n < 0) throw InvalidInput("negative vertex count");
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (auto a : arcs) add_arc(a.from, a.to);
}

void Digraph::add_arc(int i, int j) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw InvalidInput("arc endpoint out of range: " + std::to_string(i) + " " + std::to_string(j));
    if (i == j) throw InvalidInput("self-loop at vertex " + std::to_string(i));
    if (has_arc(i, j) || has_arc(j, i))
        throw InvalidInput("duplicate or antiparallel arc " + std::to_string(i) + " " + std::to_string(j));
    a_[idx(i, j)] = 1;
    ++arcs_;
}

void Digraph::remove_arc(int i, int j) {
    if (!has_arc(i, j)) throw InvalidInput("no arc " + std::to_string(i) + "->" + std::to_string(j));
    a_[idx(i, j)] = 0;
    --arcs_;
}

void Digraph::reverse_arc(int i, int j) {
    if (!has_arc(i, j)) throw InvalidInput("no arc " + std::to_string(i) + "->" + std::to_string(j));
    a_[idx(i, j)] = 0;
    a_[idx(j, i)] = 1;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(arcs_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (has_arc(i, j)) out.push_back({i, j});
    return out;
}

std::vector<int> Digraph::out_neighbors(int v) const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (has_arc(v, j)) out.push_back(j);
    return out;
}

std::vector<int> Digraph::in_neighbors(int v) const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (has_arc(j, v)) out.push_back(j);
    return out;
}

int Digraph::in_degree(int v) const {
    int c = 0;
    for (int j = 1; j <= n_; ++j) c += has_arc(j, v);
    return c;
}

int Digraph::out_degree(int v) const {
    int c = 0;
    for (int j = 1; j <= n_; ++j) c += has_arc(v, j);
    return c;
}

std::vector<int> topological_order(const Digraph& d) {
    int n = d.n();
    std::vector<int> indeg(n + 1, 0), order;
    order.reserve(n);
    for (int v = 1; v <= n; ++v) indeg[v] = d.in_degree(v);
    std::vector<int> stack;
    for (int v = n; v >= 1; --v)
        if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w = n; w >= 1; --w)
            if (d.has_arc(v, w) && --indeg[w] == 0) stack.push_back(w);
    }
    if (static_cast<int>(order.size()) != n) throw InvalidInput("digraph has a directed cycle");
    return order;
}

bool is_acyclic(const Digraph& d) {
    try {
        topological_order(d);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

std::vector<std::uint8_t> reachability(const Digraph& d) {
    int n = d.n();
    auto topo = topological_order(d);
    std::vector<std::uint8_t> r(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * (n + 1) + j; };
    for (int k = n - 1; k >= 0; --k) {
        int v = topo[k];
        for (int w = 1; w <= n; ++w) {
            if (!d.has_arc(v, w)) continue;
            r[at(v, w)] = 1;
            for (int x = 1; x <= n; ++x)
                if (r[at(w, x)]) r[at(v, x)] = 1;
        }
    }
    return r;
}

std::vector<Arc> transitive_reduction(const Digraph& d) {
    int n = d.n();
    auto r = reachability(d);
    auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * (n + 1) + j; };
    std::vector<Arc> out;
    for (auto a : d.arcs()) {
        bool redundant = false;
        for (int x = 1; x <= n && !redundant; ++x)
            if (x != a.to && d.has_arc(a.from, x) && r[at(x, a.to)]) redundant = true;
        if (!redundant) out.push_back(a);
    }
    return out;
}

std::vector<Arc> flippable_arcs(const Digraph& d) { return transitive_reduction(d); }

Digraph flip_arc(const Digraph& d, Arc a) {
    if (!d.has_arc(a.from, a.to))
        throw InvalidInput("no arc " + std::to_string(a.from) + "->" + std::to_string(a.to));
    auto tr = transitive_reduction(d);
    if (!std::binary_search(tr.begin(), tr.end(), a))
        throw InvalidInput("arc " + std::to_string(a.from) + "->" + std::to_string(a.to) +
                           " is not flippable: reversing it creates a cycle");
    Digraph out = d;
    out.reverse_arc(a.from, a.to);
    return out;
}

std::vector<int> in_degree_sequence(const Digraph& d) {
    std::vector<int> out(d.n());
    for (int v = 1; v <= d.n(); ++v) out[v - 1] = d.in_degree(v);
    return out;
}

Graph underlying_graph(const Digraph& d) {
    Graph g(d.n());
    for (auto a : d.arcs()) g.add_edge(a.from, a.to);
    return g;
}

Digraph induced_subdigraph(const Digraph& d, std::span<const int> vertices) {
    int k = static_cast<int>(vertices.size());
    Digraph out(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (d.has_arc(vertices[a], vertices[b])) out.add_arc(a + 1, b + 1);
    return out;
}

Digraph orient(const Graph& g, Mask flipped) {
    Digraph d(g.n());
    const auto& es = g.edges();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (flipped & bit(e))
            d.add_arc(es[e].v, es[e].u);
        else
            d.add_arc(es[e].u, es[e].v);
    }
    return d;
}

Mask orientation_mask(const Graph& g, const Digraph& d) {
    if (g.edge_count() > 64) throw InvalidInput("orientation mask needs at most 64 edges");
    Mask m = 0;
    const auto& es = g.edges();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (d.has_arc(es[e].v, es[e].u))
            m |= bit(e);
        else if (!d.has_arc(es[e].u, es[e].v))
            throw InvalidInput("digraph does not orient edge " + std::to_string(es[e].u) + " " +
                               std::to_string(es[e].v));
    }
    return m;
}

Digraph orient_by_order(const Graph& g, std::span<const int> linear_order) {
    std::vector<int> pos(g.n() + 1, 0);
    for (std::size_t k = 0; k < linear_order.size(); ++k) pos[linear_order[k]] = static_cast<int>(k);
    Digraph d(g.n());
    for (auto e : g.edges()) {
        if (pos[e.u] < pos[e.v])
            d.add_arc(e.u, e.v);
        else
            d.add_arc(e.v, e.u);
    }
    return d;
}

bool is_simplicial(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!g.adjacent(nb[a], nb[b])) return false;
    return true;
}

Relabeling Relabeling::from_order(std::span<const int> order) {
    int n = static_cast<int>(order.size());
    Relabeling r;
    r.old_of_new.assign(n + 1, 0);
    r.new_of_old.assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        int v = order[k - 1];
        if (v < 1 || v > n || r.new_of_old[v] != 0) throw InvalidInput("vertex order is not a permutation");
        r.old_of_new[k] = v;
        r.new_of_old[v] = k;
    }
    return r;
}

Relabeling Relabeling::identity(int n) {
    std::vector<int> order(n);
    for (int k = 0; k < n; ++k) order[k] = k + 1;
    return from_order(order);
}

Graph relabel(const Graph& g, const Relabeling& r) {
    Graph out(g.n());
    for (auto e : g.edges()) out.add_edge(r.new_of_old[e.u], r.new_of_old[e.v]);
    return out;
}

Digraph relabel(const Digraph& d, const Relabeling& r) {
    Digraph out(d.n());
    for (auto a : d.arcs()) out.add_arc(r.new_of_old[a.from], r.new_of_old[a.to]);
    return out;
}

bool is_perfect_elimination_order(const Graph& g) {
    // For each v, the largest earlier neighbour u must see all other earlier neighbours.
    for (int v = 1; v <= g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        auto end = std::lower_bound(nb.begin(), nb.end(), v);
        if (end == nb.begin()) continue;
        int u = *(end - 1);
        for (auto it = nb.begin(); it != end - 1; ++it)
            if (!g.adjacent(*it, u)) return false;
    }
    return true;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const int> order) {
    if (static_cast<int>(order.size()) != g.n()) return false;
    try {
        return is_perfect_elimination_order(relabel(g, Relabeling::from_order(order)));
    } catch (const InvalidInput&) {
        return false;
    }
}

std::optional<PeoOrder> find_peo(const Graph& g) {
    int n = g.n();
    // Lex-BFS by partition refinement. Visit order is the label order.
    std::vector<std::vector<int>> parts;
    if (n > 0) {
        parts.emplace_back();
        for (int v = 1; v <= n; ++v) parts.back().push_back(v);
    }
    std::vector<char> done(n + 1, 0);
    PeoOrder out;
    out.order.reserve(n);
    while (!parts.empty()) {
        auto& first = parts.front();
        int v = first.front();
        first.erase(first.begin());
        if (first.empty()) parts.erase(parts.begin());
        done[v] = 1;
        out.order.push_back(v);
        std::vector<std::vector<int>> next;
        next.reserve(parts.size() * 2);
        for (auto& p : parts) {
            std::vector<int> in, rest;
            for (int w : p) (g.adjacent(v, w) ? in : rest).push_back(w);
            if (!in.empty()) next.push_back(std::move(in));
            if (!rest.empty()) next.push_back(std::move(rest));
        }
        parts = std::move(next);
    }
    if (!is_perfect_elimination_order(g, out.order)) return std::nullopt;
    return out;
}

}  // namespace orientgen
