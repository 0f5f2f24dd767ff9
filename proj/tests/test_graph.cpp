#include <set>
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "orientgen/corpus.hpp"
#include "orientgen/graph.hpp"

using namespace orientgen;
using namespace orientgen::corpus;

namespace {

// Elimination by brute force: any simplicial vertex can go last.
bool chordal_by_search(const Graph& g, Mask alive) {
    if (alive == 0) return true;
    for (int v = 1; v <= g.n(); ++v) {
        if (!(alive & bit(v))) continue;
        bool simp = true;
        for (int a : g.neighbors(v))
            for (int b : g.neighbors(v))
                if (a < b && (alive & bit(a)) && (alive & bit(b)) && !g.adjacent(a, b)) simp = false;
        if (simp && chordal_by_search(g, alive & ~bit(v))) return true;
    }
    return false;
}

bool acyclic_after_flip(const Digraph& d, Arc a) {
    Digraph e = d;
    e.reverse_arc(a.from, a.to);
    return is_acyclic(e);
}

std::vector<Mask> acyclic_masks(const Graph& g) {
    std::vector<Mask> out;
    for (Mask m = 0; m < bit(g.edge_count()); ++m)
        if (is_acyclic(orient(g, m))) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("graph construction rejects loops, duplicates and bad endpoints") {
    Graph g(3);
    g.add_edge(1, 2);
    CHECK_THROWS_AS(g.add_edge(2, 1), InvalidInput);
    CHECK_THROWS_AS(g.add_edge(2, 2), InvalidInput);
    CHECK_THROWS_AS(g.add_edge(0, 2), InvalidInput);
    CHECK_THROWS_AS(g.add_edge(1, 4), InvalidInput);
    Digraph d(2);
    d.add_arc(1, 2);
    CHECK_THROWS_AS(d.add_arc(2, 1), InvalidInput);
}

TEST_CASE("find_peo") {
    CHECK(find_peo(complete_graph(4)));
    CHECK_FALSE(find_peo(cycle_graph(4)));
    CHECK(is_perfect_elimination_order(path_graph(4), std::vector<int>{4, 3, 2, 1}));
    CHECK(find_peo(empty_graph(3)));
    CHECK(find_peo(Graph(0)));
    auto sun = complete_sun(3);
    auto peo = find_peo(sun);
    REQUIRE(peo);
    CHECK(is_perfect_elimination_order(sun, peo->order));
}

TEST_CASE("find_peo agrees with exhaustive elimination up to n=7") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : graphs_up_to_iso(n)) {
            Mask all = 0;
            for (int v = 1; v <= n; ++v) all |= bit(v);
            auto peo = find_peo(g);
            CHECK(peo.has_value() == chordal_by_search(g, all));
            if (peo) CHECK(is_perfect_elimination_order(g, peo->order));
        }
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        Graph g(7);
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j)
                if (rng() % 2) g.add_edge(i, j);
        CHECK(find_peo(g).has_value() == chordal_by_search(g, 0xFE));
    }
}

TEST_CASE("is_simplicial") {
    CHECK(is_simplicial(complete_graph(4), 1));
    for (int v = 1; v <= 4; ++v) CHECK_FALSE(is_simplicial(cycle_graph(4), v));
    auto star = star_graph(3);
    CHECK_FALSE(is_simplicial(star, 4));
    CHECK(is_simplicial(star, 1));
}

TEST_CASE("transitive reduction and flips") {
    Digraph tri(3, std::vector<Arc>{{1, 2}, {2, 3}, {1, 3}});
    CHECK(transitive_reduction(tri) == std::vector<Arc>{{1, 2}, {2, 3}});
    CHECK(flippable_arcs(tri) == std::vector<Arc>{{1, 2}, {2, 3}});
    CHECK(is_acyclic(flip_arc(tri, {1, 2})));
    CHECK_THROWS_AS(flip_arc(tri, {1, 3}), InvalidInput);
    Digraph single(2, std::vector<Arc>{{1, 2}});
    CHECK(flip_arc(single, {1, 2}).has_arc(2, 1));

    Digraph cyc(3, std::vector<Arc>{{1, 2}, {2, 3}, {3, 1}});
    CHECK_FALSE(is_acyclic(cyc));
    CHECK_THROWS_AS(transitive_reduction(cyc), InvalidInput);
    Digraph c4(4, std::vector<Arc>{{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK_FALSE(is_acyclic(c4));

    // oriented tree keeps every arc
    Digraph tree(5, std::vector<Arc>{{1, 2}, {3, 2}, {2, 4}, {5, 4}});
    CHECK(transitive_reduction(tree).size() == 4);
}

TEST_CASE("transitive reduction of acyclic K_5 orientations is a Hamilton path") {
    std::mt19937_64 rng(11);
    auto k5 = complete_graph(5);
    for (int t = 0; t < 20; ++t) {
        auto order = random_permutation(rng, 5);
        auto d = orient_by_order(k5, order);
        auto tr = transitive_reduction(d);
        REQUIRE(tr.size() == 4);
        for (int k = 0; k + 1 < 5; ++k) CHECK(std::binary_search(tr.begin(), tr.end(), Arc{order[k], order[k + 1]}));
    }
}

TEST_CASE("flippable arcs are exactly the acyclicity-preserving ones") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graphs_up_to_iso(n))
            for (Mask m : acyclic_masks(g)) {
                auto d = orient(g, m);
                auto fl = flippable_arcs(d);
                for (auto a : d.arcs())
                    CHECK(std::binary_search(fl.begin(), fl.end(), a) == acyclic_after_flip(d, a));
            }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Graph g(8);
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j)
                if (rng() % 3 == 0) g.add_edge(i, j);
        auto d = orient_by_order(g, random_permutation(rng, 8));
        auto fl = flippable_arcs(d);
        for (auto a : d.arcs()) CHECK(std::binary_search(fl.begin(), fl.end(), a) == acyclic_after_flip(d, a));
    }
}

TEST_CASE("in-degree sequences") {
    CHECK(in_degree_sequence(Digraph(2, std::vector<Arc>{{1, 2}})) == std::vector<int>{0, 1});
    CHECK(in_degree_sequence(orient(complete_graph(3), 0)) == std::vector<int>{0, 1, 2});
    auto c4 = cycle_graph(4);
    auto ms = acyclic_masks(c4);
    CHECK(ms.size() == 14);
    std::set<std::vector<int>> seqs;
    for (Mask m : ms) seqs.insert(in_degree_sequence(orient(c4, m)));
    CHECK(seqs.size() == 14);
}

TEST_CASE("unique parent-child property of the last vertex in a perfect elimination order") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g0 : chordal_graphs_up_to_iso(n)) {
            auto peo = find_peo(g0);
            auto g = relabel(g0, Relabeling::from_order(peo->order));
            for (Mask m : acyclic_masks(g)) {
                auto tr = transitive_reduction(orient(g, m));
                int in = 0, out = 0;
                for (auto a : tr) {
                    in += a.to == n;
                    out += a.from == n;
                }
                CHECK(in <= 1);
                CHECK(out <= 1);
            }
        }
}

TEST_CASE("relabeling round trip") {
    auto g = path_graph(4);
    auto r = Relabeling::from_order(std::vector<int>{4, 3, 2, 1});
    auto h = relabel(g, r);
    CHECK(h.adjacent(1, 2));
    CHECK(h.adjacent(3, 4));
    CHECK_FALSE(h.adjacent(1, 3));
    CHECK(is_perfect_elimination_order(h));
    CHECK_THROWS_AS(Relabeling::from_order(std::vector<int>{1, 1, 2}), InvalidInput);
}

TEST_CASE("orientation masks round trip") {
    auto g = complete_sun(3);
    for (Mask m = 0; m < 64; ++m) CHECK(orientation_mask(g, orient(g, m)) == m);
}
