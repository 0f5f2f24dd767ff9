#include "orientgen/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace orientgen::corpus {

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(i, leaves + 1);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_sun(int k) {
    Graph g = cycle_graph(2 * k);
    for (int a = 2; a <= 2 * k; a += 2)
        for (int b = a + 2; b <= 2 * k; b += 2)
            if (!g.adjacent(a, b)) g.add_edge(a, b);
    return g;
}

Digraph transitive_tournament(int n) {
    Digraph d(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d.add_arc(i, j);
    return d;
}

std::vector<Graph> graphs_up_to_iso(int n) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            index[a][b] = index[b][a] = static_cast<int>(pairs.size());
            pairs.push_back({a, b});
        }
    int m = static_cast<int>(pairs.size());
    // pair image table per relabeling
    std::vector<std::vector<int>> images;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        std::vector<int> img(m);
        for (int e = 0; e < m; ++e) img[e] = index[p[pairs[e].first]][p[pairs[e].second]];
        images.push_back(std::move(img));
    } while (std::next_permutation(p.begin(), p.end()));
    std::set<Mask> seen;
    std::vector<Graph> out;
    for (Mask e = 0; e < bit(m); ++e) {
        Mask best = 0;
        for (const auto& img : images) {
            Mask cur = 0;
            for (Mask r = e; r; r &= r - 1) cur |= bit(img[std::countr_zero(r)]);
            best = std::max(best, cur);
        }
        if (!seen.insert(best).second) continue;
        Graph g(n);
        for (int k = 0; k < m; ++k)
            if (e & bit(k)) g.add_edge(pairs[k].first + 1, pairs[k].second + 1);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> chordal_graphs_up_to_iso(int n) {
    std::vector<Graph> out;
    for (auto& g : graphs_up_to_iso(n))
        if (find_peo(g)) out.push_back(std::move(g));
    return out;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[bounded(rng, i + 1)]);
    return p;
}

Graph random_chordal_graph(std::mt19937_64& rng, int n, double attach_bias) {
    std::vector<std::vector<int>> nb(n + 1);
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) {
        if (bounded(rng, 10) == 0) continue;  // new component
        int u = static_cast<int>(1 + bounded(rng, v - 1));
        std::vector<int> clique{u};
        // extend by earlier neighbours of u that are adjacent to everything chosen so far
        for (int w : nb[u]) {
            bool ok = std::all_of(clique.begin(), clique.end(), [&](int c) {
                return c == w || std::find(nb[c].begin(), nb[c].end(), w) != nb[c].end();
            });
            if (ok && bounded(rng, 1000) < static_cast<std::uint64_t>(attach_bias * 1000)) clique.push_back(w);
        }
        for (int c : clique) {
            nb[c].push_back(v);
            nb[v].push_back(c);
            edges.push_back({c, v});
        }
    }
    auto perm = random_permutation(rng, n);
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(perm[a - 1], perm[b - 1]);
    return g;
}

Hypergraph nested_example() { return Hypergraph(4, std::vector<std::vector<int>>{{1, 2}, {1, 2, 3}, {1, 2, 3, 4}}); }

Hypergraph stanley_pitman(int n) {
    std::vector<std::vector<int>> es;
    std::vector<int> prefix;
    for (int i = 1; i <= n; ++i) {
        prefix.push_back(i);
        es.push_back(prefix);
    }
    for (int i = 2; i <= n; ++i) es.push_back({i});
    return Hypergraph(n, std::move(es));
}

Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int m) {
    std::set<Mask> chosen;
    int tries = 0;
    while (static_cast<int>(chosen.size()) < m && tries++ < 1000) {
        Mask e = 0;
        int size = 1 + static_cast<int>(bounded(rng, n));
        while (popcount(e) < size) e |= bit(1 + static_cast<int>(bounded(rng, n)));
        chosen.insert(e);
    }
    std::vector<Mask> es(chosen.begin(), chosen.end());
    for (int i = static_cast<int>(es.size()) - 1; i > 0; --i) std::swap(es[i], es[bounded(rng, i + 1)]);
    return Hypergraph(n, es);
}

std::vector<Hypergraph> hypergraph_corpus(std::uint64_t seed, int random_count) {
    std::vector<Hypergraph> out;
    out.push_back(nested_example());
    out.push_back(stanley_pitman(3));
    out.push_back(stanley_pitman(4));
    out.push_back(Hypergraph(2, std::vector<std::vector<int>>{{1, 2}}));
    out.push_back(Hypergraph(3, std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 3}}));
    out.push_back(Hypergraph(3, std::vector<std::vector<int>>{{1}, {2}, {3}}));
    out.push_back(Hypergraph(4, std::vector<std::vector<int>>{{1, 2, 3, 4}}));
    out.push_back(graphical_building_set(path_graph(3)));
    out.push_back(graphical_building_set(cycle_graph(4)));  // not HEO
    out.push_back(Hypergraph(5, std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}, {2, 4}, {1, 5}}));
    std::mt19937_64 rng(seed);
    for (int t = 0; t < random_count; ++t) {
        int n = 2 + static_cast<int>(bounded(rng, 4));
        int m = 1 + static_cast<int>(bounded(rng, 8));
        out.push_back(random_hypergraph(rng, n, m));
    }
    return out;
}

}  // namespace orientgen::corpus
