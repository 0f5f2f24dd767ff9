#include "orientgen/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace orientgen {

namespace {

Mask vertex_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

std::vector<int> mask_vertices(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

// succ[i] = heads reachable by one arc from i
std::vector<Mask> successors(const Hypergraph& h, const HyperOrientation& o) {
    std::vector<Mask> succ(h.n() + 1, 0);
    for (int e = 0; e < h.edge_count(); ++e) {
        Mask rest = h.mask(e) & ~bit(o.heads[e]);
        for (; rest; rest &= rest - 1) succ[std::countr_zero(rest)] |= bit(o.heads[e]);
    }
    return succ;
}

// Transitive closure via topological order; empty when cyclic.
std::optional<std::vector<Mask>> closure(int n, const std::vector<Mask>& succ) {
    std::vector<int> indeg(n + 1, 0), order;
    for (int i = 1; i <= n; ++i)
        for (Mask s = succ[i]; s; s &= s - 1) ++indeg[std::countr_zero(s)];
    std::vector<int> stack;
    for (int i = 1; i <= n; ++i)
        if (indeg[i] == 0) stack.push_back(i);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Mask s = succ[v]; s; s &= s - 1) {
            int w = std::countr_zero(s);
            if (--indeg[w] == 0) stack.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    std::vector<Mask> above(n + 1, 0);
    for (int k = n - 1; k >= 0; --k) {
        int v = order[k];
        for (Mask s = succ[v]; s; s &= s - 1) {
            int w = std::countr_zero(s);
            above[v] |= bit(w) | above[w];
        }
    }
    return above;
}

// All acyclic orientations by trying every head assignment.
void for_each_acyclic(const Hypergraph& h, std::size_t cap, const std::function<void(const HyperOrientation&)>& f) {
    double total = 1;
    for (int e = 0; e < h.edge_count(); ++e) total *= static_cast<double>(h.edge(e).size());
    if (total > static_cast<double>(cap)) throw CapExceeded("head assignment count exceeds cap");
    HyperOrientation o{std::vector<int>(h.edge_count())};
    std::vector<int> idx(h.edge_count(), 0);
    for (;;) {
        for (int e = 0; e < h.edge_count(); ++e) o.heads[e] = h.edge(e)[idx[e]];
        if (is_acyclic_orientation(h, o)) f(o);
        int e = 0;
        while (e < h.edge_count() && ++idx[e] == static_cast<int>(h.edge(e).size())) idx[e++] = 0;
        if (e == h.edge_count()) break;
    }
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges) : n_(n), incident_(n + 1) {
    if (n < 0 || n > kMaxVertices) throw InvalidInput("hypergraph vertex count must be in 0..63");
    edges_.reserve(edges.size());
    for (auto& e : edges) {
        if (e.empty()) throw InvalidInput("empty hyperedge");
        std::sort(e.begin(), e.end());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 1 || e[k] > n) throw InvalidInput("hyperedge vertex out of range: " + std::to_string(e[k]));
            if (k && e[k] == e[k - 1]) throw InvalidInput("repeated vertex in hyperedge");
        }
        Mask m = vertex_mask(e);
        if (!index_.emplace(m, edge_count()).second) throw InvalidInput("duplicate hyperedge");
        for (int v : e) incident_[v].push_back(edge_count());
        masks_.push_back(m);
        edges_.push_back(std::move(e));
    }
    for (int v = 1; v <= n; ++v) max_degree_ = std::max(max_degree_, degree(v));
}

Hypergraph::Hypergraph(int n, std::span<const Mask> masks) : Hypergraph(n, [&] {
        std::vector<std::vector<int>> es;
        for (Mask m : masks) es.push_back(mask_vertices(m));
        return es;
    }()) {}

int Hypergraph::find_edge(Mask m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::size_t HyperOrientationHash::operator()(const HyperOrientation& o) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : o.heads) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
}

Hypergraph hypergraph_from_graph(const Graph& g) {
    std::vector<std::vector<int>> es;
    for (auto e : g.edges()) es.push_back({e.u, e.v});
    return Hypergraph(g.n(), std::move(es));
}

Hypergraph relabel(const Hypergraph& h, const Relabeling& r) {
    std::vector<std::vector<int>> es;
    for (int e = 0; e < h.edge_count(); ++e) {
        std::vector<int> a;
        for (int v : h.edge(e)) a.push_back(r.new_of_old[v]);
        es.push_back(std::move(a));
    }
    return Hypergraph(h.n(), std::move(es));
}

bool is_valid_orientation(const Hypergraph& h, const HyperOrientation& o) {
    if (static_cast<int>(o.heads.size()) != h.edge_count()) return false;
    for (int e = 0; e < h.edge_count(); ++e)
        if (o.heads[e] < 1 || o.heads[e] > h.n() || !(h.mask(e) & bit(o.heads[e]))) return false;
    return true;
}

HyperOrientation max_orientation(const Hypergraph& h) {
    HyperOrientation o;
    for (int e = 0; e < h.edge_count(); ++e) o.heads.push_back(h.max_vertex(e));
    return o;
}

Digraph orientation_digraph(const Hypergraph& h, const HyperOrientation& o) {
    if (!is_valid_orientation(h, o)) throw InvalidInput("head outside its hyperedge");
    auto succ = successors(h, o);
    Digraph d(h.n());
    for (int i = 1; i <= h.n(); ++i)
        for (int j : mask_vertices(succ[i])) {
            if (succ[j] & bit(i)) throw InvalidInput("orientation has a 2-cycle");
            d.add_arc(i, j);
        }
    return d;
}

bool is_acyclic_orientation(const Hypergraph& h, const HyperOrientation& o) {
    if (!is_valid_orientation(h, o)) return false;
    return closure(h.n(), successors(h, o)).has_value();
}

OrientationPoset poset_of(const Hypergraph& h, const HyperOrientation& o) {
    if (!is_valid_orientation(h, o)) throw InvalidInput("head outside its hyperedge");
    auto above = closure(h.n(), successors(h, o));
    if (!above) throw InvalidInput("orientation has a cycle");
    OrientationPoset p;
    p.n = h.n();
    p.above = std::move(*above);
    p.cover_up.assign(h.n() + 1, 0);
    for (int i = 1; i <= h.n(); ++i) {
        Mask up = p.above[i], indirect = 0;
        for (Mask s = up; s; s &= s - 1) indirect |= p.above[std::countr_zero(s)];
        p.cover_up[i] = up & ~indirect;
        for (int j : mask_vertices(p.cover_up[i])) p.covers.push_back({i, j});
    }
    return p;
}

HyperOrientation pair_flip_raw(const Hypergraph& h, const HyperOrientation& o, int i, int j) {
    HyperOrientation out = o;
    for (int e : h.incident(i))
        if (o.heads[e] == j) out.heads[e] = i;
    return out;
}

std::optional<HyperOrientation> pair_flip(const Hypergraph& h, const HyperOrientation& o, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > h.n() || j > h.n()) return std::nullopt;
    auto out = pair_flip_raw(h, o, i, j);
    if (out == o || !is_acyclic_orientation(h, out)) return std::nullopt;
    return out;
}

std::vector<Arc> flippable_pairs(const Hypergraph& h, const HyperOrientation& o) { return poset_of(h, o).covers; }

std::vector<int> restricted_edges(const Hypergraph& h, int i) {
    Mask inside = i >= 63 ? ~Mask{0} : bit(i + 1) - 1;
    std::vector<int> out;
    for (int e = 0; e < h.edge_count(); ++e)
        if ((h.mask(e) & ~inside) == 0) out.push_back(e);
    return out;
}

Hypergraph restrict(const Hypergraph& h, int i) {
    if (i < 0 || i > h.n()) throw InvalidInput("restriction index out of range");
    std::vector<std::vector<int>> es;
    for (int e : restricted_edges(h, i)) es.push_back(h.edge(e));
    return Hypergraph(i, std::move(es));
}

HyperOrientation restrict_orientation(const Hypergraph& h, const HyperOrientation& o, int i) {
    HyperOrientation out;
    for (int e : restricted_edges(h, i)) out.heads.push_back(o.heads[e]);
    return out;
}

bool heo_condition(const Hypergraph& h, int v, Mask alive) {
    std::vector<Mask> with_v;
    for (int e : h.incident(v))
        if ((h.mask(e) & ~alive) == 0) with_v.push_back(h.mask(e));
    std::vector<Mask> inside;
    for (Mask m : h.masks())
        if ((m & ~alive) == 0 && !(m & bit(v))) inside.push_back(m);
    for (Mask A : with_v)
        for (Mask B : with_v) {
            Mask bound = (A | B) & ~bit(v);
            for (int a : mask_vertices(A & ~bit(v)))
                for (int b : mask_vertices(B & ~bit(v))) {
                    if (a == b) continue;
                    Mask need = bit(a) | bit(b);
                    bool found = std::any_of(inside.begin(), inside.end(),
                                             [&](Mask X) { return (X & need) == need && (X & ~bound) == 0; });
                    if (!found) return false;
                }
        }
    return true;
}

bool is_heo(const Hypergraph& h) {
    Mask alive = 0;
    for (int v = 1; v <= h.n(); ++v) alive |= bit(v);
    for (int v = h.n(); v >= 1; --v) {
        if (!heo_condition(h, v, alive)) return false;
        alive &= ~bit(v);
    }
    return true;
}

bool is_heo(const Hypergraph& h, std::span<const int> order) {
    if (static_cast<int>(order.size()) != h.n()) return false;
    try {
        return is_heo(relabel(h, Relabeling::from_order(order)));
    } catch (const InvalidInput&) {
        return false;
    }
}

std::optional<std::vector<int>> find_heo(const Hypergraph& h) {
    int n = h.n();
    std::vector<int> rev;  // last vertex first
    std::unordered_set<Mask> failed;
    std::function<bool(Mask)> search = [&](Mask alive) {
        if (alive == 0) return true;
        if (failed.count(alive)) return false;
        for (int v = n; v >= 1; --v) {
            if (!(alive & bit(v)) || !heo_condition(h, v, alive)) continue;
            rev.push_back(v);
            if (search(alive & ~bit(v))) return true;
            rev.pop_back();
        }
        failed.insert(alive);
        return false;
    };
    Mask all = 0;
    for (int v = 1; v <= n; ++v) all |= bit(v);
    if (!search(all)) return std::nullopt;
    return std::vector<int>(rev.rbegin(), rev.rend());
}

bool check_unique_parent_child(const Hypergraph& h, std::size_t cap) {
    for (int i = 1; i <= h.n(); ++i) {
        auto hi = restrict(h, i);
        bool ok = true;
        for_each_acyclic(hi, cap, [&](const HyperOrientation& o) {
            if (!ok) return;
            auto p = poset_of(hi, o);
            int down = 0;
            for (int k = 1; k <= i; ++k) down += (p.cover_up[k] & bit(i)) != 0;
            if (popcount(p.cover_up[i]) > 1 || down > 1) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool is_building_set(const Hypergraph& h) {
    for (int v = 1; v <= h.n(); ++v)
        if (h.find_edge(bit(v)) < 0) return false;
    for (int a = 0; a < h.edge_count(); ++a)
        for (int b = a + 1; b < h.edge_count(); ++b)
            if ((h.mask(a) & h.mask(b)) && h.find_edge(h.mask(a) | h.mask(b)) < 0) return false;
    return true;
}

bool is_chordal_building_set(const Hypergraph& h) {
    if (!is_building_set(h)) return false;
    for (int e = 0; e < h.edge_count(); ++e) {
        Mask prefix = 0;
        for (int v : h.edge(e)) {
            prefix |= bit(v);
            if (h.find_edge(prefix) < 0) return false;
        }
    }
    return true;
}

Hypergraph graphical_building_set(const Graph& g, std::size_t cap) {
    int n = g.n();
    if (n > Hypergraph::kMaxVertices) throw InvalidInput("graph too large for a building set");
    std::vector<Mask> nb(n + 1, 0);
    for (auto e : g.edges()) {
        nb[e.u] |= bit(e.v);
        nb[e.v] |= bit(e.u);
    }
    std::unordered_set<Mask> seen;
    std::vector<Mask> frontier;
    for (int v = 1; v <= n; ++v) {
        seen.insert(bit(v));
        frontier.push_back(bit(v));
    }
    while (!frontier.empty()) {
        std::vector<Mask> next;
        for (Mask s : frontier) {
            Mask ext = 0;
            for (Mask r = s; r; r &= r - 1) ext |= nb[std::countr_zero(r)];
            ext &= ~s;
            for (; ext; ext &= ext - 1) {
                Mask t = s | (ext & -ext);
                if (seen.insert(t).second) {
                    if (seen.size() > cap)
                        throw CapExceeded("graphical building set exceeds " + std::to_string(cap) + " hyperedges");
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Mask> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end());
    return Hypergraph(n, all);
}

HyperOrientation orientation_from_permutation(const Hypergraph& h, const Permutation& pi) {
    if (pi.size() != h.n()) throw InvalidInput("permutation length differs from vertex count");
    HyperOrientation o;
    for (int e = 0; e < h.edge_count(); ++e) {
        int best = h.edge(e).front();
        for (int v : h.edge(e))
            if (pi.position(v) > pi.position(best)) best = v;
        o.heads.push_back(best);
    }
    return o;
}

std::vector<int> in_degree_sequence(const Hypergraph& h, const HyperOrientation& o) {
    std::vector<int> d(h.n(), 0);
    for (int e = 0; e < h.edge_count(); ++e) ++d[o.heads[e] - 1];
    return d;
}

ElimForest orientation_to_elim_forest(const Hypergraph& bg, const HyperOrientation& o) {
    if (!is_building_set(bg)) throw InvalidInput("hypergraph is not a building set");
    auto p = poset_of(bg, o);
    ElimForest f{std::vector<int>(bg.n() + 1, 0)};
    for (int v = 1; v <= bg.n(); ++v) {
        if (popcount(p.cover_up[v]) > 1) throw std::logic_error("building-set poset is not a forest");
        if (p.cover_up[v]) f.parent[v] = std::countr_zero(p.cover_up[v]);
    }
    return f;
}

HyperOrientation elim_forest_to_orientation(const Hypergraph& bg, const ElimForest& f) {
    if (!is_building_set(bg)) throw InvalidInput("hypergraph is not a building set");
    int n = bg.n();
    if (static_cast<int>(f.parent.size()) != n + 1) throw InvalidInput("forest size differs from vertex count");
    std::vector<Mask> anc(n + 1, 0);  // strict ancestors
    std::vector<int> depth(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        int u = f.parent[v], steps = 0;
        while (u != 0) {
            if (u < 0 || u > n || ++steps > n) throw InvalidInput("parent array is not a forest");
            anc[v] |= bit(u);
            u = f.parent[u];
        }
        depth[v] = steps;
    }
    HyperOrientation o;
    for (int e = 0; e < bg.edge_count(); ++e) {
        int top = bg.edge(e).front();
        for (int v : bg.edge(e))
            if (depth[v] < depth[top]) top = v;
        for (int v : bg.edge(e))
            if (v != top && !(anc[v] & bit(top))) throw InvalidInput("hyperedge is not below a single forest vertex");
        o.heads.push_back(top);
    }
    return o;
}

}  // namespace orientgen
