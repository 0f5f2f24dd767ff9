#include "orientgen/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace orientgen::oracle {

namespace {

bool reaches(const std::vector<Mask>& succ, int from, int to) {
    Mask seen = bit(from), frontier = bit(from);
    while (frontier) {
        int x = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask nx = succ[x] & ~seen;
        if (nx & bit(to)) return true;
        seen |= nx;
        frontier |= nx;
    }
    return false;
}

struct GraphSearch {
    const Graph& g;
    std::size_t cap;
    std::atomic<std::size_t>* total;
    std::vector<Mask> succ;
    std::vector<Mask> out;
    bool overflow = false;

    void run(int e, Mask mask) {
        if (overflow) return;
        if (e == g.edge_count()) {
            if (total->fetch_add(1) >= cap) {
                overflow = true;
                return;
            }
            out.push_back(mask);
            return;
        }
        auto [u, v] = g.edges()[e];
        if (!reaches(succ, v, u)) {
            succ[u] |= bit(v);
            run(e + 1, mask);
            succ[u] &= ~bit(v);
        }
        if (!reaches(succ, u, v)) {
            succ[v] |= bit(u);
            run(e + 1, mask | bit(e));
            succ[v] &= ~bit(u);
        }
    }
};

std::vector<Mask> graph_prefixes(const Graph& g, int depth) {
    std::vector<Mask> out;
    for (Mask m = 0; m < bit(depth); ++m) {
        Digraph d(g.n());
        for (int e = 0; e < depth; ++e) {
            auto [u, v] = g.edges()[e];
            if (m & bit(e))
                d.add_arc(v, u);
            else
                d.add_arc(u, v);
        }
        if (is_acyclic(d)) out.push_back(m);
    }
    return out;
}

struct HyperSearch {
    const Hypergraph& h;
    std::size_t cap;
    std::atomic<std::size_t>* total;
    std::vector<Mask> succ;
    std::vector<int> heads;
    std::vector<HyperOrientation> out;
    bool overflow = false;

    bool place(int e, int head, std::vector<std::pair<int, Mask>>& undo) {
        Mask rest = h.mask(e) & ~bit(head);
        for (Mask r = rest; r; r &= r - 1)
            if (reaches(succ, head, std::countr_zero(r))) return false;
        for (Mask r = rest; r; r &= r - 1) {
            int i = std::countr_zero(r);
            undo.push_back({i, succ[i]});
            succ[i] |= bit(head);
        }
        heads[e] = head;
        return true;
    }

    void run(int e) {
        if (overflow) return;
        if (e == h.edge_count()) {
            if (total->fetch_add(1) >= cap) {
                overflow = true;
                return;
            }
            out.push_back({heads});
            return;
        }
        for (int head : h.edge(e)) {
            std::vector<std::pair<int, Mask>> undo;
            if (place(e, head, undo)) run(e + 1);
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) succ[it->first] = it->second;
        }
    }
};

FlipGraph assemble(std::vector<std::string> labels, std::vector<std::vector<std::pair<int, std::string>>> nbrs) {
    FlipGraph fg;
    fg.labels = std::move(labels);
    fg.adj.resize(fg.labels.size());
    for (std::size_t u = 0; u < nbrs.size(); ++u) {
        std::sort(nbrs[u].begin(), nbrs[u].end());
        for (auto& [v, lab] : nbrs[u]) {
            fg.adj[u].push_back(v);
            if (static_cast<int>(u) < v) fg.edges.push_back({static_cast<int>(u), v, lab});
        }
    }
    return fg;
}

std::string heads_label(const HyperOrientation& o) {
    std::string s;
    for (int v : o.heads) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

std::string mask_label(Mask m) {
    std::ostringstream os;
    os << std::hex << m;
    return os.str();
}

}  // namespace

std::vector<Mask> enumerate_ao_graph(const Graph& g, std::size_t cap, Exec exec) {
    if (g.edge_count() > 63) throw CapExceeded("more than 63 edges");
    std::atomic<std::size_t> total{0};
    std::vector<Mask> out;
    if (exec == Exec::serial) {
        GraphSearch s{g, cap, &total, std::vector<Mask>(g.n() + 1, 0), {}};
        s.run(0, 0);
        if (s.overflow) throw CapExceeded("acyclic orientation count exceeds cap of " + std::to_string(cap));
        out = std::move(s.out);
    } else {
        int depth = std::min(g.edge_count(), 10);
        auto prefixes = graph_prefixes(g, depth);
        std::vector<std::vector<Mask>> parts(prefixes.size());
        std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < static_cast<long>(prefixes.size()); ++k) {
            GraphSearch s{g, cap, &total, std::vector<Mask>(g.n() + 1, 0), {}};
            for (int e = 0; e < depth; ++e) {
                auto [u, v] = g.edges()[e];
                if (prefixes[k] & bit(e))
                    s.succ[v] |= bit(u);
                else
                    s.succ[u] |= bit(v);
            }
            s.run(depth, prefixes[k]);
            if (s.overflow) overflow = true;
            parts[k] = std::move(s.out);
        }
        if (overflow) throw CapExceeded("acyclic orientation count exceeds cap of " + std::to_string(cap));
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Digraph> enumerate_ao_graph_digraphs(const Graph& g, std::size_t cap) {
    std::vector<Digraph> out;
    for (Mask m : enumerate_ao_graph(g, cap)) out.push_back(orient(g, m));
    return out;
}

std::vector<HyperOrientation> enumerate_ao_hyper(const Hypergraph& h, std::size_t cap, Exec exec) {
    std::atomic<std::size_t> total{0};
    if (exec == Exec::serial || h.edge_count() == 0) {
        HyperSearch s{h, cap, &total, std::vector<Mask>(h.n() + 1, 0), std::vector<int>(h.edge_count()), {}};
        s.run(0);
        if (s.overflow) throw CapExceeded("acyclic orientation count exceeds cap of " + std::to_string(cap));
        return std::move(s.out);
    }
    // split on the head of the first hyperedge with a choice
    const auto& first = h.edge(0);
    std::vector<std::vector<HyperOrientation>> parts(first.size());
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(first.size()); ++k) {
        HyperSearch s{h, cap, &total, std::vector<Mask>(h.n() + 1, 0), std::vector<int>(h.edge_count()), {}};
        std::vector<std::pair<int, Mask>> undo;
        if (s.place(0, first[k], undo)) s.run(1);
        if (s.overflow) overflow = true;
        parts[k] = std::move(s.out);
    }
    if (overflow) throw CapExceeded("acyclic orientation count exceeds cap of " + std::to_string(cap));
    std::vector<HyperOrientation> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool FlipGraph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= size() || v >= size()) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

FlipGraph graph_flip_graph(const Graph& g, std::span<const Mask> orientations, Exec exec) {
    std::unordered_map<Mask, int> index;
    for (std::size_t k = 0; k < orientations.size(); ++k) index[orientations[k]] = static_cast<int>(k);
    std::size_t n = orientations.size();
    std::vector<std::vector<std::pair<int, std::string>>> nbrs(n);
    std::vector<std::string> labels(n);
    auto work = [&](std::size_t u) {
        Mask m = orientations[u];
        labels[u] = mask_label(m);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto it = index.find(m ^ bit(e));
            if (it == index.end()) continue;
            auto ed = g.edges()[e];
            nbrs[u].push_back({it->second, std::to_string(ed.u) + " " + std::to_string(ed.v)});
        }
    };
    if (exec == Exec::serial) {
        for (std::size_t u = 0; u < n; ++u) work(u);
    } else {
#pragma omp parallel for schedule(static)
        for (long u = 0; u < static_cast<long>(n); ++u) work(static_cast<std::size_t>(u));
    }
    return assemble(std::move(labels), std::move(nbrs));
}

FlipGraph hyper_flip_graph(const Hypergraph& h, std::span<const HyperOrientation> orientations, Exec exec) {
    std::unordered_map<HyperOrientation, int, HyperOrientationHash> index;
    for (std::size_t k = 0; k < orientations.size(); ++k) index[orientations[k]] = static_cast<int>(k);
    std::size_t n = orientations.size();
    std::vector<std::vector<std::pair<int, std::string>>> nbrs(n);
    std::vector<std::string> labels(n);
    auto work = [&](std::size_t u) {
        const auto& o = orientations[u];
        labels[u] = heads_label(o);
        std::set<int> found;
        for (int i = 1; i <= h.n(); ++i)
            for (int j = 1; j <= h.n(); ++j) {
                if (i == j) continue;
                HyperOrientation f = o;
                for (int e = 0; e < h.edge_count(); ++e)
                    if (o.heads[e] == j && (h.mask(e) & bit(i))) f.heads[e] = i;
                if (f == o) continue;
                auto it = index.find(f);
                if (it != index.end() && found.insert(it->second).second)
                    nbrs[u].push_back({it->second, std::to_string(i) + " " + std::to_string(j)});
            }
    };
    if (exec == Exec::serial) {
        for (std::size_t u = 0; u < n; ++u) work(u);
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (long u = 0; u < static_cast<long>(n); ++u) work(static_cast<std::size_t>(u));
    }
    auto fg = assemble(std::move(labels), std::move(nbrs));
    for (int u = 0; u < fg.size(); ++u)
        for (int v : fg.adj[u])
            if (!fg.adjacent(v, u)) throw std::logic_error("pair-flip relation is not symmetric");
    return fg;
}

ElimForest elim_forest_from_permutation(const Graph& g, const Permutation& pi) {
    int n = g.n();
    if (n > 63) throw InvalidInput("graph too large");
    std::vector<Mask> nb(n + 1, 0);
    for (auto e : g.edges()) {
        nb[e.u] |= bit(e.v);
        nb[e.v] |= bit(e.u);
    }
    ElimForest f{std::vector<int>(n + 1, 0)};
    std::function<void(Mask, int)> build;
    auto split = [&](Mask rest, int parent) {
        while (rest) {
            Mask comp = rest & -rest, frontier = comp;
            while (frontier) {
                int x = std::countr_zero(frontier);
                frontier &= frontier - 1;
                Mask nx = nb[x] & rest & ~comp;
                comp |= nx;
                frontier |= nx;
            }
            rest &= ~comp;
            build(comp, parent);
        }
    };
    // verts is connected here
    build = [&](Mask verts, int parent) {
        int r = 0;
        for (int k = 1; k <= n && !r; ++k)
            if (verts & bit(pi[k])) r = pi[k];
        f.parent[r] = parent;
        split(verts & ~bit(r), r);
    };
    Mask all = 0;
    for (int v = 1; v <= n; ++v) all |= bit(v);
    split(all, 0);
    return f;
}

RotationGraph rotation_graph(const Graph& g) {
    auto perms = all_permutations(g.n());
    std::vector<ElimForest> of(perms.size());
    std::set<ElimForest> uniq;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        of[k] = elim_forest_from_permutation(g, perms[k]);
        uniq.insert(of[k]);
    }
    RotationGraph rg;
    rg.forests.assign(uniq.begin(), uniq.end());
    auto id = [&](const ElimForest& f) {
        return static_cast<int>(std::lower_bound(rg.forests.begin(), rg.forests.end(), f) - rg.forests.begin());
    };
    std::vector<std::set<int>> nb(rg.forests.size());
    for (std::size_t k = 0; k < perms.size(); ++k) {
        int a = id(of[k]);
        auto e = std::vector<int>(perms[k].entries().begin(), perms[k].entries().end());
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            std::swap(e[i], e[i + 1]);
            int b = id(elim_forest_from_permutation(g, Permutation(e)));
            std::swap(e[i], e[i + 1]);
            if (a != b) {
                nb[a].insert(b);
                nb[b].insert(a);
            }
        }
    }
    std::vector<std::string> labels;
    std::vector<std::vector<std::pair<int, std::string>>> nbrs(rg.forests.size());
    for (std::size_t a = 0; a < rg.forests.size(); ++a) {
        std::string s;
        for (std::size_t v = 1; v < rg.forests[a].parent.size(); ++v) {
            if (v > 1) s += ' ';
            s += std::to_string(rg.forests[a].parent[v]);
        }
        labels.push_back(s);
        for (int b : nb[a]) nbrs[a].push_back({b, ""});
    }
    rg.graph = assemble(std::move(labels), std::move(nbrs));
    return rg;
}

FlipGraph quotient_cover_graph(std::span<const Mask> elements, std::span<const int> class_of, int class_count) {
    int c = class_count;
    std::vector<std::vector<char>> less(c, std::vector<char>(c, 0));
    for (std::size_t x = 0; x < elements.size(); ++x)
        for (std::size_t y = 0; y < elements.size(); ++y)
            if (class_of[x] != class_of[y] && (elements[x] & ~elements[y]) == 0) less[class_of[x]][class_of[y]] = 1;
    for (int k = 0; k < c; ++k)
        for (int i = 0; i < c; ++i)
            if (less[i][k])
                for (int j = 0; j < c; ++j)
                    if (less[k][j]) less[i][j] = 1;
    for (int i = 0; i < c; ++i)
        if (less[i][i]) throw InvalidInput("classes do not form a quotient poset");
    std::vector<std::string> labels(c);
    std::vector<std::vector<std::pair<int, std::string>>> nbrs(c);
    for (int i = 0; i < c; ++i) {
        labels[i] = std::to_string(i);
        for (int j = 0; j < c; ++j) {
            if (!less[i][j]) continue;
            bool cover = true;
            for (int k = 0; k < c && cover; ++k)
                if (less[i][k] && less[k][j]) cover = false;
            if (cover) {
                nbrs[i].push_back({j, ""});
                nbrs[j].push_back({i, ""});
            }
        }
    }
    return assemble(std::move(labels), std::move(nbrs));
}

PathCertificate certify_hamilton_path(const FlipGraph& fg, std::span<const int> listing) {
    PathCertificate c;
    if (static_cast<int>(listing.size()) != fg.size()) {
        c.failure = "listing has " + std::to_string(listing.size()) + " entries, flip graph has " +
                    std::to_string(fg.size()) + " vertices";
        return c;
    }
    std::vector<char> seen(fg.size(), 0);
    for (std::size_t k = 0; k < listing.size(); ++k) {
        int v = listing[k];
        if (v < 0 || v >= fg.size()) {
            c.failure = "entry " + std::to_string(k) + " is not a flip-graph vertex";
            return c;
        }
        if (seen[v]) {
            c.failure = "vertex " + fg.labels[v] + " visited twice";
            return c;
        }
        seen[v] = 1;
        if (k && !fg.adjacent(listing[k - 1], v)) {
            c.failure = "steps " + std::to_string(k - 1) + " and " + std::to_string(k) + " are not adjacent";
            return c;
        }
    }
    c.ok = true;
    c.cyclic = listing.size() >= 3 && fg.adjacent(listing.front(), listing.back());
    return c;
}

bool is_bipartite(const FlipGraph& fg) {
    std::vector<int> colour(fg.size(), -1);
    for (int s = 0; s < fg.size(); ++s) {
        if (colour[s] >= 0) continue;
        colour[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : fg.adj[u]) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    q.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> bfs_distances(const FlipGraph& fg, int source) {
    std::vector<int> dist(fg.size(), -1);
    dist[source] = 0;
    std::deque<int> q{source};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : fg.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

bool check_flip_distance(const FlipGraph& fg, std::span<const Mask> orientations, int a, int b) {
    return bfs_distances(fg, a)[b] == popcount(orientations[a] ^ orientations[b]);
}

bool check_all_flip_distances(const FlipGraph& fg, std::span<const Mask> orientations, Exec exec) {
    auto row_ok = [&](int s) {
        auto d = bfs_distances(fg, s);
        for (int t = 0; t < fg.size(); ++t)
            if (d[t] != popcount(orientations[s] ^ orientations[t])) return false;
        return true;
    };
    if (exec == Exec::serial) {
        for (int s = 0; s < fg.size(); ++s)
            if (!row_ok(s)) return false;
        return true;
    }
    int bad = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
    for (int s = 0; s < fg.size(); ++s) bad += row_ok(s) ? 0 : 1;
    return bad == 0;
}

std::string to_dot(const FlipGraph& fg, std::span<const int> path) {
    std::set<std::pair<int, int>> on_path;
    for (std::size_t k = 1; k < path.size(); ++k)
        on_path.insert({std::min(path[k - 1], path[k]), std::max(path[k - 1], path[k])});
    std::ostringstream os;
    os << "graph flips {\n";
    for (int v = 0; v < fg.size(); ++v) os << "  n" << v << " [label=\"" << fg.labels[v] << "\"];\n";
    for (const auto& e : fg.edges) {
        os << "  n" << e.u << " -- n" << e.v;
        bool p = on_path.count({e.u, e.v}) > 0;
        if (!e.label.empty() || p) {
            os << " [";
            if (!e.label.empty()) os << "label=\"" << e.label << "\"";
            if (!e.label.empty() && p) os << ", ";
            if (p) os << "path=1";
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace orientgen::oracle

namespace orientgen::oracle {

bool vertebrate_by_definition(const Digraph& d) {
    if (!is_acyclic(d)) return false;
    int n = d.n();
    for (Mask s = 1; s < bit(n); ++s) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (s & bit(v)) vs.push_back(v + 1);
        auto sub = induced_subdigraph(d, vs);
        auto tr = transitive_reduction(sub);
        std::vector<int> uf(sub.n() + 1);
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
        for (auto a : tr) {
            int x = find(a.from), y = find(a.to);
            if (x == y) return false;
            uf[x] = y;
        }
    }
    return true;
}

bool filled_by_definition(const Digraph& d) {
    if (!is_acyclic(d)) return false;
    int n = d.n();
    std::vector<int> path;
    std::function<bool(int)> dfs = [&](int v) {
        path.push_back(v);
        if (path.size() >= 3 && d.has_arc(path.front(), v))
            for (std::size_t i = 0; i < path.size(); ++i)
                for (std::size_t j = i + 1; j < path.size(); ++j)
                    if (!d.has_arc(path[i], path[j])) return false;
        for (int w : d.out_neighbors(v))
            if (!dfs(w)) return false;
        path.pop_back();
        return true;
    };
    for (int v = 1; v <= n; ++v) {
        path.clear();
        if (!dfs(v)) return false;
    }
    return true;
}

bool peo_consistent_by_definition(const Digraph& d) {
    int n = d.n();
    std::map<Mask, bool> memo;
    std::function<bool(Mask)> ok = [&](Mask alive) {
        if (popcount(alive) <= 1) return true;
        if (auto it = memo.find(alive); it != memo.end()) return it->second;
        bool res = false;
        for (int v = 1; v <= n && !res; ++v) {
            if (!(alive & bit(v))) continue;
            bool in = false, out = false;
            std::vector<int> nb;
            for (int w = 1; w <= n; ++w) {
                if (!(alive & bit(w))) continue;
                if (d.has_arc(w, v)) in = true, nb.push_back(w);
                if (d.has_arc(v, w)) out = true, nb.push_back(w);
            }
            if (in && out) continue;
            bool clique = true;
            for (std::size_t i = 0; i < nb.size() && clique; ++i)
                for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
                    clique = d.has_arc(nb[i], nb[j]) || d.has_arc(nb[j], nb[i]);
            if (clique) res = ok(alive & ~bit(v));
        }
        return memo[alive] = res;
    };
    Mask all = 0;
    for (int v = 1; v <= n; ++v) all |= bit(v);
    return is_acyclic(d) && ok(all);
}

}  // namespace orientgen::oracle
