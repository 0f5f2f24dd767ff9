#include <map>
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "orientgen/corpus.hpp"
#include "orientgen/hypergraph.hpp"

using namespace orientgen;
using namespace orientgen::corpus;

namespace {

std::vector<HyperOrientation> all_assignments(const Hypergraph& h) {
    std::vector<HyperOrientation> out;
    HyperOrientation o{std::vector<int>(h.edge_count())};
    std::vector<std::size_t> idx(h.edge_count(), 0);
    for (;;) {
        for (int e = 0; e < h.edge_count(); ++e) o.heads[e] = h.edge(e)[idx[e]];
        out.push_back(o);
        int e = 0;
        while (e < h.edge_count() && ++idx[e] == h.edge(e).size()) idx[e++] = 0;
        if (e == h.edge_count()) break;
    }
    return out;
}

std::vector<HyperOrientation> all_acyclic(const Hypergraph& h) {
    std::vector<HyperOrientation> out;
    for (auto& o : all_assignments(h))
        if (is_acyclic_orientation(h, o)) out.push_back(o);
    return out;
}

// Directed cycle search on the raw arc relation, including 2-cycles.
bool has_cycle(const Hypergraph& h, const HyperOrientation& o) {
    int n = h.n();
    std::vector<std::vector<char>> r(n + 1, std::vector<char>(n + 1, 0));
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edge(e))
            if (v != o.heads[e]) r[v][o.heads[e]] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = 1;
    for (int i = 1; i <= n; ++i)
        if (r[i][i]) return true;
    return false;
}

}  // namespace

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{1, 2}, {2, 1}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph(3, std::vector<std::vector<int>>{{4}}), InvalidInput);
    auto h = nested_example();
    CHECK(h.max_degree() == 3);
    CHECK(h.degree(4) == 1);
}

TEST_CASE("orientation digraph of the nested example") {
    auto h = nested_example();
    HyperOrientation o{{1, 1, 4}};
    auto d = orientation_digraph(h, o);
    CHECK(d.arcs() == std::vector<Arc>{{1, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 4}});
    CHECK(is_acyclic_orientation(h, o));
    auto p = poset_of(h, o);
    CHECK_FALSE(p.less(2, 3));
    CHECK_FALSE(p.less(3, 2));
    CHECK(p.less(2, 1));
    CHECK(p.less(1, 4));
    CHECK(p.less(3, 1));
    CHECK(p.less(2, 4));
    auto flipped = pair_flip(h, o, 1, 4);
    REQUIRE(flipped);
    CHECK(flipped->heads == std::vector<int>{1, 1, 1});
    CHECK_FALSE(pair_flip(h, o, 4, 1));  // no hyperedge headed at 1 contains 4

    Hypergraph single(2, std::vector<std::vector<int>>{{2}});
    CHECK(orientation_digraph(single, {{2}}).arc_count() == 0);
    Hypergraph tri(3, std::vector<std::vector<int>>{{1, 2}, {2, 3}, {1, 3}});
    CHECK_FALSE(is_acyclic_orientation(tri, {{2, 3, 1}}));
}

TEST_CASE("acyclic assignments match permutation-induced orientations") {
    for (const auto& h : {nested_example(), stanley_pitman(4), graphical_building_set(path_graph(4))}) {
        auto acyc = all_acyclic(h);
        std::map<HyperOrientation, int> classes;
        for (const auto& p : all_permutations(h.n())) {
            auto o = orientation_from_permutation(h, p);
            CHECK(is_acyclic_orientation(h, o));
            auto dg = orientation_digraph(h, o);
            for (auto a : dg.arcs()) CHECK(p.position(a.from) < p.position(a.to));
            ++classes[o];
        }
        CHECK(classes.size() == acyc.size());
        // class sizes are linear extension counts
        for (auto& [o, count] : classes) {
            auto poset = poset_of(h, o);
            int ext = 0;
            for (const auto& p : all_permutations(h.n())) {
                bool ok = true;
                for (auto c : poset.covers) ok = ok && p.position(c.from) < p.position(c.to);
                ext += ok;
            }
            CHECK(ext == count);
        }
    }
    CHECK(all_acyclic(nested_example()).size() < 24);
}

TEST_CASE("acyclicity agrees with explicit cycle search") {
    for (const auto& h : hypergraph_corpus(5, 40))
        for (const auto& o : all_assignments(h)) CHECK(is_acyclic_orientation(h, o) == !has_cycle(h, o));
}

TEST_CASE("pair flips succeed exactly on covers") {
    for (const auto& h : hypergraph_corpus(1, 60)) {
        if (h.n() > 4 || h.edge_count() > 6) continue;
        for (const auto& o : all_acyclic(h)) {
            auto p = poset_of(h, o);
            CHECK(flippable_pairs(h, o) == p.covers);
            for (int i = 1; i <= h.n(); ++i)
                for (int j = 1; j <= h.n(); ++j) {
                    if (i == j) continue;
                    bool cover = (p.cover_up[i] & bit(j)) != 0;
                    CHECK(pair_flip(h, o, i, j).has_value() == cover);
                }
        }
    }
}

TEST_CASE("2-uniform posets match graph reachability") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        auto g = random_chordal_graph(rng, 6);
        auto h = hypergraph_from_graph(g);
        auto order = random_permutation(rng, 6);
        auto d = orient_by_order(g, order);
        HyperOrientation o;
        for (auto e : g.edges()) o.heads.push_back(d.has_arc(e.u, e.v) ? e.v : e.u);
        CHECK(orientation_digraph(h, o) == d);
        auto p = poset_of(h, o);
        auto r = reachability(d);
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j) CHECK(p.less(i, j) == (r[i * 7 + j] != 0));
        CHECK(p.covers == transitive_reduction(d));
    }
    CHECK(flippable_pairs(hypergraph_from_graph(complete_graph(5)), max_orientation(hypergraph_from_graph(complete_graph(5)))).size() == 4);
    Hypergraph one(1, std::vector<std::vector<int>>{{1}});
    CHECK(flippable_pairs(one, {{1}}).empty());
}

TEST_CASE("restriction") {
    auto r = restrict(nested_example(), 3);
    CHECK(r.n() == 3);
    CHECK(r.edge_count() == 2);
    CHECK(restrict(nested_example(), 0).edge_count() == 0);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 20; ++t) {
        auto g = random_chordal_graph(rng, 6);
        g = relabel(g, Relabeling::from_order(find_peo(g)->order));
        auto bg = graphical_building_set(g);
        for (int i = 0; i <= 6; ++i) {
            Graph gi(i);
            for (auto e : g.edges())
                if (e.v <= i) gi.add_edge(e.u, e.v);
            auto a = restrict(bg, i).masks();
            auto b = graphical_building_set(gi).masks();
            CHECK(std::set<Mask>(a.begin(), a.end()) == std::set<Mask>(b.begin(), b.end()));
        }
    }
}

TEST_CASE("hyperfect elimination orders") {
    CHECK(is_heo(nested_example()));
    CHECK(find_heo(nested_example()));
    CHECK_FALSE(find_heo(graphical_building_set(cycle_graph(4))));
    CHECK_FALSE(is_heo(graphical_building_set(cycle_graph(4)), std::vector<int>{1, 2, 3, 4}));
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : graphs_up_to_iso(n)) {
            auto h = hypergraph_from_graph(g);
            auto order = find_heo(h);
            CHECK(order.has_value() == find_peo(g).has_value());
            if (order) CHECK(is_perfect_elimination_order(g, *order));
            if (n <= 5) CHECK(find_heo(graphical_building_set(g)).has_value() == find_peo(g).has_value());
        }
}

TEST_CASE("find_heo is complete on small hypergraphs") {
    // exhaustive order search as reference
    for (const auto& h : hypergraph_corpus(77, 150)) {
        bool any = false;
        for (const auto& p : all_permutations(h.n()))
            if (is_heo(h, p.entries())) {
                any = true;
                break;
            }
        auto found = find_heo(h);
        CHECK(found.has_value() == any);
        if (found) CHECK(is_heo(h, *found));
    }
}

TEST_CASE("unique parent-child property characterises identity HEO") {
    CHECK(check_unique_parent_child(nested_example()));
    CHECK_FALSE(check_unique_parent_child(graphical_building_set(cycle_graph(4))));
    CHECK(check_unique_parent_child(Hypergraph(2, std::vector<std::vector<int>>{{1, 2}})));
    // the head of [k] covers k-1 vertices
    CHECK_FALSE(check_unique_parent_child(Hypergraph(4, std::vector<std::vector<int>>{{1, 2, 3, 4}})));
    CHECK_FALSE(is_heo(Hypergraph(4, std::vector<std::vector<int>>{{1, 2, 3, 4}})));
    for (const auto& h : hypergraph_corpus(3, 200)) {
        if (h.n() > 4 || h.edge_count() > 6) continue;
        CHECK(is_heo(h) == check_unique_parent_child(h));
    }
}

TEST_CASE("building sets") {
    auto sp = stanley_pitman(4);
    CHECK(is_building_set(sp));
    CHECK(is_chordal_building_set(sp));
    // not graphical: 1 and 2 span an edge but {2,3} is missing while {1,2,3} needs a path
    bool graphical = false;
    for (const auto& g : graphs_up_to_iso(4))
        for (const auto& p : all_permutations(4)) {
            auto bg = graphical_building_set(relabel(g, Relabeling::from_order(p.entries())));
            auto a = bg.masks();
            auto b = sp.masks();
            if (std::set<Mask>(a.begin(), a.end()) == std::set<Mask>(b.begin(), b.end())) graphical = true;
        }
    CHECK_FALSE(graphical);
    CHECK(graphical_building_set(path_graph(3)).masks() ==
          std::vector<Mask>{bit(1), bit(2), bit(1) | bit(2), bit(3), bit(2) | bit(3), bit(1) | bit(2) | bit(3)});
    CHECK(graphical_building_set(complete_graph(3)).edge_count() == 7);
    CHECK(graphical_building_set(empty_graph(3)).edge_count() == 3);
    CHECK_THROWS_AS(graphical_building_set(complete_graph(12), 100), CapExceeded);
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graphs_up_to_iso(n)) CHECK(is_building_set(graphical_building_set(g)));
}

TEST_CASE("chordal building sets are exactly those in HEO") {
    // all building sets on [4] by closing random families
    std::mt19937_64 rng(5);
    int chordal = 0, total = 0;
    for (int t = 0; t < 400; ++t) {
        int n = 3 + static_cast<int>(rng() % 3);
        std::set<Mask> fam;
        for (int v = 1; v <= n; ++v) fam.insert(bit(v));
        int extra = static_cast<int>(rng() % 4);
        for (int k = 0; k < extra; ++k) {
            Mask e = 0;
            while (popcount(e) < 2) e |= bit(1 + static_cast<int>(rng() % n));
            fam.insert(e);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Mask> cur(fam.begin(), fam.end());
            for (Mask a : cur)
                for (Mask b : cur)
                    if ((a & b) && fam.insert(a | b).second) changed = true;
        }
        Hypergraph h(n, std::vector<Mask>(fam.begin(), fam.end()));
        REQUIRE(is_building_set(h));
        ++total;
        chordal += is_chordal_building_set(h);
        CHECK(is_chordal_building_set(h) == is_heo(h));
    }
    CHECK(chordal > 0);
    CHECK(chordal < total);
}

TEST_CASE("in-degree sequences") {
    Hypergraph h(3, std::vector<std::vector<int>>{{1, 2}, {1, 2, 3}});
    CHECK(in_degree_sequence(h, max_orientation(h)) == std::vector<int>{0, 1, 1});
    auto acyc = all_acyclic(nested_example());
    std::set<std::vector<int>> seqs;
    for (const auto& o : acyc) seqs.insert(in_degree_sequence(nested_example(), o));
    CHECK(seqs.size() == acyc.size());
}

TEST_CASE("elimination forests") {
    auto bg = graphical_building_set(path_graph(3));
    auto acyc = all_acyclic(bg);
    CHECK(acyc.size() == 5);
    std::set<ElimForest> forests;
    for (const auto& o : acyc) {
        auto f = orientation_to_elim_forest(bg, o);
        CHECK(elim_forest_to_orientation(bg, f) == o);
        forests.insert(f);
    }
    CHECK(forests.size() == 5);
    auto one = graphical_building_set(Graph(1));
    CHECK(orientation_to_elim_forest(one, max_orientation(one)).parent == std::vector<int>{0, 0});
    for (int n = 1; n <= 5; ++n) {
        auto kb = graphical_building_set(complete_graph(n));
        std::set<HyperOrientation> orients;
        for (const auto& p : all_permutations(n)) orients.insert(orientation_from_permutation(kb, p));
        CHECK(orients.size() == all_permutations(n).size());
        for (const auto& o : orients) {
            auto f = orientation_to_elim_forest(kb, o);
            int roots = 0;
            std::vector<int> kids(n + 1, 0);
            for (int v = 1; v <= n; ++v) {
                roots += f.parent[v] == 0;
                if (f.parent[v]) ++kids[f.parent[v]];
            }
            CHECK(roots == 1);
            CHECK(*std::max_element(kids.begin(), kids.end()) <= 1);
            CHECK(elim_forest_to_orientation(kb, f) == o);
        }
    }
    CHECK_THROWS_AS(orientation_to_elim_forest(nested_example(), HyperOrientation{{1, 1, 4}}), InvalidInput);
}

TEST_CASE("building-set posets are forests") {
    for (const auto& h : {stanley_pitman(4), graphical_building_set(path_graph(4)),
                          graphical_building_set(complete_sun(2))})
        for (const auto& o : all_acyclic(h)) {
            auto p = poset_of(h, o);
            for (int v = 1; v <= h.n(); ++v) CHECK(popcount(p.cover_up[v]) <= 1);
        }
}
