#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "orientgen/chordal_ao.hpp"
#include "orientgen/corpus.hpp"
#include "orientgen/oracle.hpp"
#include "orientgen/quotient.hpp"

using namespace orientgen;
using namespace orientgen::quotient;
using DC = DigraphClass;

namespace {

std::vector<Digraph> acyclic_orientations(const Graph& g) {
    std::vector<Digraph> out;
    for (Mask m : oracle::enumerate_ao_graph(g)) out.push_back(orient(g, m));
    return out;
}

// Every acyclic orientation of every graph up to isomorphism on n vertices.
std::vector<Digraph> small_digraphs(int n) {
    std::vector<Digraph> out;
    for (const auto& g : corpus::graphs_up_to_iso(n))
        for (auto& d : acyclic_orientations(g)) out.push_back(std::move(d));
    return out;
}

std::vector<std::pair<int, int>> random_seeds(std::mt19937_64& rng, const ARPoset& p, int count) {
    std::vector<std::pair<int, int>> s;
    for (int i = 0; i < count; ++i) {
        int x = static_cast<int>(corpus::bounded(rng, p.size()));
        if (p.up[x].empty()) continue;
        s.push_back({x, p.up[x][corpus::bounded(rng, p.up[x].size())]});
    }
    return s;
}

oracle::FlipGraph quotient_graph(const ARPoset& p, const Congruence& c) {
    return oracle::quotient_cover_graph(p.elements, c.class_of, c.count());
}

std::vector<int> visited_classes(const std::vector<QuotientVisit>& path) {
    std::vector<int> out;
    for (const auto& v : path) out.push_back(v.class_id);
    return out;
}

void check_certified(const ARPoset& p, const Congruence& c) {
    auto path = generate_quotient_path(p, c);
    auto cert = oracle::certify_hamilton_path(quotient_graph(p, c), visited_classes(path));
    CHECK_MESSAGE(cert.ok, cert.failure);
    for (const auto& v : path) CHECK(c.class_of[p.index_of(v.reorientation)] == v.class_id);
}

// All set partitions of [0, n).
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> label(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            f(label);
            return;
        }
        for (int k = 0; k <= used; ++k) {
            label[i] = k;
            rec(i + 1, std::max(used, k + 1));
        }
    };
    if (n > 0) rec(1, 1);
}

}  // namespace

TEST_CASE("classification of reference digraphs") {
    for (int n = 1; n <= 6; ++n) CHECK(classify(corpus::transitive_tournament(n)) == DC::skeletal);
    Digraph cyc(3, std::vector<Arc>{{1, 2}, {2, 3}, {3, 1}});
    CHECK(classify(cyc) == DC::not_acyclic);
    CHECK(classify(Digraph(3)) == DC::skeletal);

    // a path 1->2->3->4 closed by 1->4 but missing 2->4: peo-consistent, not filled
    Digraph b(4, std::vector<Arc>{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    CHECK(classify(b) == DC::peo_consistent);
    // transitive reduction is a 4-cycle
    Digraph d(4, std::vector<Arc>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    CHECK(classify(d) == DC::acyclic);

    auto sun = corpus::complete_sun(3);
    int peo = 0;
    for (const auto& o : acyclic_orientations(sun)) {
        auto k = classify(o);
        CHECK(k != DC::skeletal);
        peo += k == DC::peo_consistent;
    }
    CHECK(peo > 0);
}

TEST_CASE("class inclusions hold and every gap is witnessed") {
    std::set<DC> seen;
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : small_digraphs(n)) {
            auto k = classify(d);
            seen.insert(k);
            bool skel = is_skeletal(d), peo = peo_consistent_order(d).has_value(), vert = is_vertebrate(d);
            if (skel) CHECK(peo);
            if (peo) CHECK(vert);
            CHECK((k == DC::skeletal) == skel);
            if (peo) {
                auto o = peo_consistent_order(d)->order;
                auto g = relabel(underlying_graph(d), Relabeling::from_order(o));
                CHECK(is_perfect_elimination_order(g));
            }
        }
    CHECK(seen.count(DC::acyclic));
    CHECK(seen.count(DC::vertebrate));
    CHECK(seen.count(DC::peo_consistent));
    CHECK(seen.count(DC::skeletal));
}

TEST_CASE("reorientation posets") {
    Digraph one(2, std::vector<Arc>{{1, 2}});
    auto p1 = build_ar_poset(one);
    CHECK(p1.size() == 2);
    CHECK(p1.up[0] == std::vector<int>{1});

    auto t3 = build_ar_poset(corpus::transitive_tournament(3));
    CHECK(t3.size() == 6);
    auto lt = lattice_tables(t3);
    CHECK(lt.is_lattice);
    // covers are adjacent transpositions of the linear extensions
    for (int i = 0; i < 6; ++i)
        for (int j : t3.up[i]) {
            auto a = topological_order(t3.digraph(t3.elements[i]));
            auto b = topological_order(t3.digraph(t3.elements[j]));
            int diff = 0;
            for (int k = 0; k < 3; ++k) diff += a[k] != b[k];
            CHECK(diff == 2);
        }

    Digraph d(4, std::vector<Arc>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    auto pd = build_ar_poset(d);
    auto td = lattice_tables(pd);
    CHECK_FALSE(td.is_lattice);
    REQUIRE(td.witness);
    CHECK(lattice_tables(pd, Exec::parallel).witness == td.witness);
}

TEST_CASE("covers are single flips and the order is graded") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& d : small_digraphs(n)) {
            auto p = build_ar_poset(d);
            for (int i = 0; i < p.size(); ++i)
                for (int j = 0; j < p.size(); ++j) {
                    if (i == j || !p.leq(i, j)) continue;
                    bool cover = true;
                    for (int k = 0; k < p.size() && cover; ++k)
                        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) cover = false;
                    bool listed = std::find(p.up[i].begin(), p.up[i].end(), j) != p.up[i].end();
                    CHECK(cover == listed);
                    if (cover) CHECK(popcount(p.elements[j]) == popcount(p.elements[i]) + 1);
                }
        }
}

TEST_CASE("lattice iff vertebrate, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& d : small_digraphs(n)) {
            auto p = build_ar_poset(d);
            CHECK(lattice_tables(p).is_lattice == is_vertebrate(d));
        }
}

TEST_CASE("congruence validation") {
    auto p = build_ar_poset(corpus::transitive_tournament(4));
    auto t = lattice_tables(p, Exec::parallel);
    CHECK(validate_congruence(p, t, identity_congruence(p)));
    CHECK(validate_congruence(p, t, total_congruence(p)));
    auto syl = sylvester_congruence(p);
    CHECK(syl.count() == 14);
    CHECK(validate_congruence(p, t, syl));
    CHECK(validate_congruence(p, t, syl, Exec::parallel));
    // merging bottom and top alone is not an interval
    std::vector<int> l(p.size());
    for (int i = 0; i < p.size(); ++i) l[i] = i;
    l[p.size() - 1] = 0;
    CHECK_FALSE(validate_congruence(p, t, make_congruence(l)));
    // one cover contracted in isolation does not respect joins
    l[p.size() - 1] = p.size() - 1;
    l[p.up[0][0]] = 0;
    auto bad = make_congruence(l);
    auto res = validate_congruence(p, t, bad);
    CHECK_FALSE(res);
    CHECK_FALSE(validate_congruence(p, t, bad, Exec::parallel));

    Digraph d(4, std::vector<Arc>{{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    auto pd = build_ar_poset(d);
    CHECK_FALSE(validate_congruence(pd, lattice_tables(pd), identity_congruence(pd)));
}

TEST_CASE("generated congruence is the smallest valid one, K_3") {
    auto p = build_ar_poset(corpus::transitive_tournament(3));
    auto t = lattice_tables(p);
    std::vector<Congruence> valid;
    for_each_partition(p.size(), [&](const std::vector<int>& l) {
        auto c = make_congruence(l);
        if (validate_congruence(p, t, c)) valid.push_back(c);
    });
    CHECK(valid.size() > 2);
    auto refines = [](const Congruence& a, const Congruence& b) {
        for (const auto& cls : a.classes)
            for (int x : cls)
                if (b.class_of[x] != b.class_of[cls[0]]) return false;
        return true;
    };
    for (int x = 0; x < p.size(); ++x)
        for (int y : p.up[x]) {
            std::vector<std::pair<int, int>> seed{{x, y}};
            auto g = generated_congruence(p, t, seed);
            auto f = forcing_closure(p, t, seed);
            CHECK(g == f);
            const Congruence* best = nullptr;
            for (const auto& c : valid)
                if (c.class_of[x] == c.class_of[y] && (!best || refines(c, *best))) best = &c;
            REQUIRE(best);
            CHECK(*best == g);
        }
}

TEST_CASE("forcing closure") {
    auto p = build_ar_poset(corpus::transitive_tournament(4));
    auto t = lattice_tables(p);
    CHECK(forcing_closure(p, t, {}) == identity_congruence(p));
    std::vector<std::pair<int, int>> all;
    for (int x = 0; x < p.size(); ++x)
        for (int y : p.up[x]) all.push_back({x, y});
    CHECK(forcing_closure(p, t, all).count() == 1);
    auto polys = polygons(p, t);
    int hex = 0;
    for (const auto& q : polys) hex += q.hexagon();
    CHECK(hex > 0);
    CHECK(hex < static_cast<int>(polys.size()));

    Digraph b(4, std::vector<Arc>{{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    auto pb = build_ar_poset(b);
    CHECK_THROWS_AS(forcing_closure(pb, lattice_tables(pb), {}), InvalidInput);

    std::mt19937_64 rng(31);
    int tried = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& d : small_digraphs(n)) {
            if (!is_skeletal(d) || corpus::bounded(rng, 3) != 0) continue;
            auto q = build_ar_poset(d);
            auto tq = lattice_tables(q);
            auto seeds = random_seeds(rng, q, 1 + static_cast<int>(corpus::bounded(rng, 2)));
            auto f = forcing_closure(q, tq, seeds);
            CHECK(f == generated_congruence(q, tq, seeds));
            CHECK(validate_congruence(q, tq, f));
            ++tried;
        }
    CHECK(tried > 20);
}

TEST_CASE("sylvester congruence and restriction") {
    auto p4 = build_ar_poset(corpus::transitive_tournament(4));
    auto syl = sylvester_congruence(p4);
    auto [p3, r] = restriction(p4, syl, 4);
    CHECK(p3.size() == 6);
    CHECK(r == sylvester_congruence(p3));
    CHECK(r.count() == 5);
    CHECK(restriction(p4, identity_congruence(p4), 4).second == identity_congruence(p3));
    CHECK(restriction(p4, total_congruence(p4), 4).second.count() == 1);
    int sizes[] = {1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 5; ++n)
        CHECK(sylvester_congruence(build_ar_poset(corpus::transitive_tournament(n))).count() == sizes[n]);
}

TEST_CASE("representatives") {
    auto p = build_ar_poset(corpus::transitive_tournament(4));
    auto syl = sylvester_congruence(p);
    auto reps = select_representatives(p, syl);
    std::set<Permutation> got(reps.perms.begin(), reps.perms.end()), want;
    for (const auto& pi : all_permutations(4))
        if (!contains_pattern_231(pi)) want.insert(pi);
    CHECK(want.size() == 14);
    CHECK(got == want);
    CHECK(is_zigzag_language(reps.perms));
    CHECK(reps.rules.back() == RailRule::rd1);

    CHECK(select_representatives(p, total_congruence(p)).perms.size() == 1);
    auto total = select_representatives(p, total_congruence(p));
    CHECK(total.rules.back() == RailRule::rd2);

    for (const auto& g : corpus::chordal_graphs_up_to_iso(5)) {
        auto gp = relabel(g, Relabeling::from_order(find_peo(g)->order));
        auto q = build_ar_poset(orient(gp, 0));
        auto id = select_representatives(q, identity_congruence(q));
        std::set<Permutation> pg, pd(id.perms.begin(), id.perms.end());
        for (Mask m : oracle::enumerate_ao_graph(gp)) pg.insert(chordal::encode(gp, orient(gp, m)));
        CHECK(pg == pd);
    }

    for (const auto& d : small_digraphs(5))
        if (classify(d) == DC::vertebrate) {
            auto pv = build_ar_poset(d);
            CHECK_THROWS_AS(select_representatives(pv, identity_congruence(pv)), InvalidInput);
            break;
        }
}

TEST_CASE("quotient paths on the K_4 tournament") {
    auto p = build_ar_poset(corpus::transitive_tournament(4));
    auto syl = sylvester_congruence(p);
    auto path = generate_quotient_path(p, syl);
    CHECK(path.size() == 14);
    CHECK(path.front().reorientation == 0);
    check_certified(p, syl);
    std::set<Permutation> reps;
    for (const auto& v : path) reps.insert(v.perm);
    for (const auto& pi : reps) CHECK_FALSE(contains_pattern_231(pi));

    auto id = generate_quotient_path(p, identity_congruence(p));
    CHECK(id.size() == 24);
    check_certified(p, identity_congruence(p));
    CHECK(generate_quotient_path(p, total_congruence(p)).size() == 1);
}

TEST_CASE("identity congruence reproduces the chordal listing") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : corpus::chordal_graphs_up_to_iso(n)) {
            auto gp = relabel(g, Relabeling::from_order(find_peo(g)->order));
            auto d = orient(gp, 0);
            auto q = build_ar_poset(d);
            auto path = generate_quotient_path(q, identity_congruence(q));
            chordal::SswGenerator gen(gp);
            std::size_t k = 0;
            do {
                REQUIRE(k < path.size());
                CHECK(q.digraph(path[k].reorientation) == gen.orientation());
                ++k;
            } while (gen.next());
            CHECK(k == path.size());
        }
}

TEST_CASE("projection, rails and ladders on peo-consistent references") {
    std::mt19937_64 rng(5);
    int checked = 0, hexes = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& d : small_digraphs(n)) {
            auto order = peo_consistent_order(d);
            if (!order || corpus::bounded(rng, n == 5 ? 6 : 2) != 0) continue;
            auto p = build_ar_poset(d);
            auto t = lattice_tables(p);
            int last = order->order.back();
            auto lad = check_ladders(p, last);
            CHECK_MESSAGE(lad.ok, lad.failure);
            hexes += lad.hexagons;
            for (int s = 0; s < 3; ++s) {
                auto c = generated_congruence(p, t, random_seeds(rng, p, s));
                REQUIRE(validate_congruence(p, t, c));
                auto pr = check_projection(p, c, last);
                CHECK_MESSAGE(pr.ok, pr.failure);
                auto ri = check_rail_intervals(p, c, last);
                CHECK_MESSAGE(ri.ok, ri.failure);
                check_certified(p, c);
                auto reps = select_representatives(p, c);
                CHECK(is_zigzag_language(reps.perms));
                ++checked;
            }
        }
    CHECK(checked > 100);
    CHECK(hexes > 0);
}

TEST_CASE("start permutation encodes the reference when every vertex joins as a sink") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        auto g0 = corpus::random_chordal_graph(rng, 5);
        auto g = relabel(g0, Relabeling::from_order(find_peo(g0)->order));
        auto p = build_ar_poset(orient(g, 0));
        auto c = generated_congruence(p, lattice_tables(p), random_seeds(rng, p, 1));
        auto path = generate_quotient_path(p, c);
        CHECK(path.front().class_id == c.class_of[0]);
        CHECK(path.front().perm == Permutation::identity(5));
    }
}
