#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "orientgen/chordal_ao.hpp"
#include "orientgen/corpus.hpp"
#include "orientgen/jump.hpp"

using namespace orientgen;
using namespace orientgen::corpus;

namespace {

const char* kSjt4[] = {"1234", "1243", "1423", "4123", "4132", "1432", "1342", "1324",
                       "3124", "3142", "3412", "4312", "4321", "3421", "3241", "3214",
                       "2314", "2341", "2431", "4231", "4213", "2413", "2143", "2134"};

std::vector<Mask> brute_masks(const Graph& g) {
    std::vector<Mask> out;
    for (Mask m = 0; m < bit(g.edge_count()); ++m)
        if (is_acyclic(orient(g, m))) out.push_back(m);
    return out;
}

Graph in_peo(const Graph& g) { return relabel(g, Relabeling::from_order(find_peo(g)->order)); }

// Runs the generator with all per-step checks and returns the permutation trace.
std::vector<Permutation> checked_run(const Graph& g) {
    chordal::SswGenerator gen(g, {.track_permutation = true});
    std::vector<Permutation> trace{gen.permutation()};
    std::set<Mask> seen{orientation_mask(g, gen.orientation())};
    CHECK(gen.permutation() == Permutation::identity(g.n()));
    Digraph prev = gen.orientation();
    while (gen.next()) {
        const auto& cur = gen.orientation();
        auto arc = *gen.last_flip();
        CHECK(cur.has_arc(arc.from, arc.to));
        CHECK(prev.has_arc(arc.to, arc.from));
        auto tr = transitive_reduction(prev);
        CHECK(std::binary_search(tr.begin(), tr.end(), Arc{arc.to, arc.from}));
        Digraph undo = cur;
        undo.reverse_arc(arc.from, arc.to);
        CHECK(undo == prev);
        CHECK(is_acyclic(cur));
        CHECK(seen.insert(orientation_mask(g, cur)).second);
        CHECK(chordal::encode(g, cur) == gen.permutation());
        trace.push_back(gen.permutation());
        prev = cur;
    }
    CHECK(seen.size() == brute_masks(g).size());
    return trace;
}

}  // namespace

TEST_CASE("encode and decode basics") {
    auto k3 = complete_graph(3);
    CHECK(chordal::encode(k3, orient(k3, 0)) == Permutation::identity(3));
    CHECK(chordal::decode(k3, Permutation::identity(3)) == orient(k3, 0));
    CHECK(chordal::decode(k3, parse_permutation("321")) == orient(k3, 7));
    CHECK_THROWS_AS(chordal::encode(cycle_graph(4), orient(cycle_graph(4), 0)), InvalidInput);
    Digraph cyc(3, std::vector<Arc>{{1, 2}, {2, 3}, {3, 1}});
    CHECK_THROWS_AS(chordal::encode(k3, cyc), InvalidInput);
}

TEST_CASE("complete graphs encode as source-to-sink readings") {
    for (int n = 1; n <= 5; ++n) {
        auto g = complete_graph(n);
        std::set<Permutation> images;
        for (Mask m : brute_masks(g)) {
            auto d = orient(g, m);
            auto p = chordal::encode(g, d);
            auto topo = topological_order(d);
            CHECK(std::vector<int>(p.entries().begin(), p.entries().end()) == topo);
            images.insert(p);
        }
        CHECK(images.size() == all_permutations(n).size());
    }
}

TEST_CASE("encode/decode round trip and linear extension property") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g0 : chordal_graphs_up_to_iso(n)) {
            auto g = in_peo(g0);
            std::vector<Permutation> image;
            for (Mask m : brute_masks(g)) {
                auto d = orient(g, m);
                auto p = chordal::encode(g, d);
                CHECK(chordal::decode(g, p) == d);
                for (auto a : d.arcs()) CHECK(p.position(a.from) < p.position(a.to));
                image.push_back(p);
            }
            CHECK(is_zigzag_language(image));
        }
}

TEST_CASE("K_4 generation reproduces plain changes") {
    auto g = complete_graph(4);
    chordal::SswGenerator gen(g, {.track_permutation = true});
    std::vector<std::string> got{gen.permutation().to_string()};
    CHECK(chordal::encode(g, gen.orientation()) == Permutation::identity(4));
    while (gen.next()) {
        got.push_back(gen.permutation().to_string());
        CHECK(chordal::encode(g, gen.orientation()).to_string() == got.back());
    }
    REQUIRE(got.size() == 24);
    for (int k = 0; k < 24; ++k) {
        std::string want;
        for (char c : std::string(kSjt4[k])) {
            if (!want.empty()) want += ' ';
            want += c;
        }
        CHECK(got[k] == want);
    }
}

TEST_CASE("small instances") {
    CHECK(checked_run(path_graph(2)).size() == 2);
    auto star = relabel(star_graph(3), Relabeling::from_order(std::vector<int>{4, 1, 2, 3}));
    CHECK(checked_run(star).size() == 8);
    CHECK(checked_run(Graph(1)).size() == 1);
    CHECK(checked_run(Graph(0)).size() == 1);
    CHECK(checked_run(empty_graph(4)).size() == 1);
    CHECK_THROWS_AS(chordal::SswGenerator(cycle_graph(4)), InvalidInput);
}

TEST_CASE("all chordal graphs up to n=6 and random ones at n=7") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g0 : chordal_graphs_up_to_iso(n)) {
            auto g = in_peo(g0);
            auto trace = checked_run(g);
            std::vector<Permutation> image;
            for (Mask m : brute_masks(g)) image.push_back(chordal::encode(g, orient(g, m)));
            CHECK(trace == algorithm_j(LanguageOracle::from_set(n, image)));
        }
    std::mt19937_64 rng(99);
    for (int t = 0; t < 30; ++t) {
        auto g0 = random_chordal_graph(rng, 7);
        checked_run(in_peo(g0));
    }
}

TEST_CASE("generator with an explicit order works in new labels") {
    auto g = path_graph(4);
    PeoOrder order{{4, 3, 2, 1}};
    chordal::SswGenerator gen(g, order);
    CHECK(gen.relabeling().old_of_new[1] == 4);
    int count = 1;
    while (gen.next()) ++count;
    CHECK(count == 8);
    CHECK_THROWS_AS(chordal::SswGenerator(cycle_graph(4), PeoOrder{{1, 2, 3, 4}}), InvalidInput);
}

TEST_CASE("sweeps zigzag between sink and source") {
    auto g = in_peo(complete_sun(3));
    chordal::SswGenerator gen(g);
    // each vertex j: between sweeps it is alternately a sink and a source in D_j
    int n = g.n();
    std::vector<int> last_state(n + 1, 1);  // 1 sink, -1 source
    auto state = [&](int j) {
        bool sink = true, source = true;
        for (int i : g.neighbors(j)) {
            if (i > j) break;
            if (gen.orientation().has_arc(j, i)) sink = false;
            if (gen.orientation().has_arc(i, j)) source = false;
        }
        return sink ? 1 : source ? -1 : 0;
    };
    while (gen.next()) {
        int j = std::max(gen.last_flip()->from, gen.last_flip()->to);
        int st = state(j);
        if (st != 0) {
            CHECK(st == -last_state[j]);
            last_state[j] = st;
        }
    }
}

TEST_CASE("cost counters") {
    // trees: every sorted neighbourhood has one element
    auto tree = path_graph(8);
    chordal::SswGenerator gen(tree);
    while (gen.next()) {
    }
    CHECK(gen.counters().visits == 128);
    CHECK(gen.counters().flips == 127);
    CHECK(gen.counters().matrix_writes == 2 * gen.counters().flips);
    CHECK(gen.counters().comparisons_per_visit() <= 1.0);
    chordal::SswGenerator k6(complete_graph(6));
    while (k6.next()) {
    }
    CHECK(k6.counters().visits == 720);
    CHECK(k6.counters().comparisons_per_visit() < 8 * std::log2(6.0));
}
