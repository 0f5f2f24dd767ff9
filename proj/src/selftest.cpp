#include "orientgen/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "orientgen/certify.hpp"
#include "orientgen/chordal_ao.hpp"
#include "orientgen/cli.hpp"
#include "orientgen/corpus.hpp"
#include "orientgen/hyper_ao.hpp"
#include "orientgen/io.hpp"
#include "orientgen/oracle.hpp"
#include "orientgen/quotient.hpp"

namespace orientgen::selftest {

namespace {

using quotient::DigraphClass;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

const char* kSjt[][24] = {
    {"12", "21"},
    {"123", "132", "312", "321", "231", "213"},
    {"1234", "1243", "1423", "4123", "4132", "1432", "1342", "1324", "3124", "3142", "3412", "4312",
     "4321", "3421", "3241", "3214", "2314", "2341", "2431", "4231", "4213", "2413", "2143", "2134"},
};

std::string spaced(const char* compact) {
    std::string s;
    for (const char* c = compact; *c; ++c) {
        if (c != compact) s += ' ';
        s += *c;
    }
    return s;
}

Graph in_peo(const Graph& g) { return relabel(g, Relabeling::from_order(find_peo(g)->order)); }

std::vector<Digraph> small_digraphs(int n) {
    std::vector<Digraph> out;
    for (const auto& g : corpus::graphs_up_to_iso(n))
        for (Mask m : oracle::enumerate_ao_graph(g)) out.push_back(orient(g, m));
    return out;
}

std::vector<std::pair<int, int>> random_covers(std::mt19937_64& rng, const quotient::ARPoset& p, int count) {
    std::vector<std::pair<int, int>> s;
    for (int i = 0; i < count; ++i) {
        int x = static_cast<int>(corpus::bounded(rng, p.size()));
        if (!p.up[x].empty()) s.push_back({x, p.up[x][corpus::bounded(rng, p.up[x].size())]});
    }
    return s;
}

std::vector<Hypergraph> heo_corpus(bool quick) {
    auto hs = corpus::hypergraph_corpus(77, quick ? 40 : 200);
    hs.push_back(corpus::nested_example());
    for (int n = 2; n <= 5; ++n) hs.push_back(corpus::stanley_pitman(n));
    return hs;
}

std::string c1() {
    for (int n = 2; n <= 4; ++n) {
        std::ostringstream out, err;
        cli::AoGraphConfig cfg;
        cfg.output = "perm";
        cli::ao_graph(corpus::complete_graph(n), cfg, out, err);
        std::string want;
        for (const char* p : kSjt[n - 2])
            if (p) want += spaced(p) + "\n";
        expect(out.str() == want, "K_" + std::to_string(n) + " trace differs from plain changes");
    }
    return "K_2, K_3, K_4 traces match";
}

std::string c2(bool quick) {
    int graphs = 0;
    std::size_t total = 0;
    for (int n = 1; n <= (quick ? 5 : 6); ++n)
        for (const auto& g : corpus::chordal_graphs_up_to_iso(n)) {
            auto r = certify::graph_listing(g, *find_peo(g));
            expect(r.ok && r.count == r.expected, "chordal n=" + std::to_string(n) + ": " + r.failure);
            ++graphs;
            total += r.count;
        }
    std::mt19937_64 rng(2024);
    for (int t = 0; t < (quick ? 20 : 100); ++t) {
        int n = 2 + static_cast<int>(corpus::bounded(rng, 8));
        auto g = corpus::random_chordal_graph(rng, n);
        auto r = certify::graph_listing(g, *find_peo(g));
        expect(r.ok && r.count == r.expected, "random chordal #" + std::to_string(t) + ": " + r.failure);
        ++graphs;
        total += r.count;
    }
    return std::to_string(graphs) + " graphs, " + std::to_string(total) + " orientations, seed 2024";
}

std::string c3(bool quick) {
    double sxy = 0, sxx = 0, worst = 0, k10 = 0;
    std::ostringstream d;
    d << std::fixed << std::setprecision(3);
    for (int n = 7; n <= (quick ? 9 : 10); ++n) {
        auto t0 = std::chrono::steady_clock::now();
        chordal::SswGenerator gen(corpus::complete_graph(n));
        while (gen.next()) {
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double y = gen.counters().comparisons_per_visit(), x = std::log2(n);
        expect(y <= 8 * x, "K_" + std::to_string(n) + " exceeds 8 log2 n");
        sxy += x * y;
        sxx += x * x;
        worst = std::max(worst, y / x);
        if (n == 10) k10 = secs;
        d << "n=" << n << " cpv=" << y << " ";
    }
    double c = sxy / sxx;
    expect(c <= 4, "fitted constant above 4");
    if (!quick) expect(k10 < 30, "K_10 took longer than 30 s");
    d << "c=" << c;
    if (!quick) d << " K_10 " << std::setprecision(2) << k10 << "s";
    return d.str();
}

std::string c4(bool quick) {
    int n = 0;
    for (const auto& h : heo_corpus(quick)) {
        auto order = find_heo(h);
        if (!order) continue;
        auto r = certify::hyper_listing(h, *order);
        expect(r.ok && r.count == r.expected, "hypergraph #" + std::to_string(n) + ": " + r.failure);
        ++n;
    }
    expect(n > 20, "too few HEO hypergraphs in the corpus");
    return std::to_string(n) + " HEO hypergraphs certified, seed 77";
}

std::string c5(bool quick) {
    int graphs = 0;
    for (int n = 1; n <= (quick ? 5 : 6); ++n)
        for (const auto& g0 : corpus::chordal_graphs_up_to_iso(n)) {
            auto g = in_peo(g0);
            auto h = hypergraph_from_graph(g);
            chordal::SswGenerator a(g);
            hyper::HyperGenerator b(h);
            bool more = true;
            while (more) {
                expect(orientation_digraph(h, b.orientation()) == a.orientation(), "2-uniform sequence differs");
                more = a.next();
                expect(more == b.next(), "2-uniform listing lengths differ");
            }
            ++graphs;
        }
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    int top = quick ? 6 : 7;
    for (int n = 1; n <= top; ++n) {
        auto p = corpus::path_graph(n);
        auto r = certify::elim_listing(p, *find_peo(p));
        expect(r.ok && r.count == catalan[n], "P_" + std::to_string(n) + ": " + r.failure);
    }
    return std::to_string(graphs) + " chordal graphs equal; P_" + std::to_string(top) + " gives " +
           std::to_string(catalan[top]) + " certified";
}

std::string c6(bool quick) {
    std::set<DigraphClass> seen;
    int count = 0;
    for (int n = 1; n <= (quick ? 4 : 5); ++n)
        for (const auto& d : small_digraphs(n)) {
            bool v = oracle::vertebrate_by_definition(d), f = oracle::filled_by_definition(d),
                 p = oracle::peo_consistent_by_definition(d);
            auto want = !v              ? DigraphClass::acyclic
                        : f             ? DigraphClass::skeletal
                        : p             ? DigraphClass::peo_consistent
                                        : DigraphClass::vertebrate;
            auto got = quotient::classify(d);
            expect(got == want, "classify disagrees with the definitions");
            expect(!(v && f) || p, "skeletal but not peo-consistent");
            expect(!p || v, "peo-consistent but not vertebrate");
            seen.insert(got);
            ++count;
        }
    const std::vector<Arc> cyc_arcs{{1, 2}, {2, 3}, {3, 1}};
    Digraph cyc(3, cyc_arcs);
    expect(quotient::classify(cyc) == DigraphClass::not_acyclic, "directed cycle");
    for (auto k : {DigraphClass::acyclic, DigraphClass::vertebrate, DigraphClass::peo_consistent, DigraphClass::skeletal})
        expect(seen.count(k), std::string("no witness for ") + std::string(quotient::to_string(k)));
    auto sun = corpus::complete_sun(3);
    int peo = 0;
    for (Mask m : oracle::enumerate_ao_graph(sun)) {
        auto k = quotient::classify(orient(sun, m));
        expect(k != DigraphClass::skeletal, "skeletal orientation of the 3-sun");
        peo += k == DigraphClass::peo_consistent;
    }
    expect(peo > 0, "no peo-consistent orientation of the 3-sun");
    return std::to_string(count) + " digraphs; 3-sun: " + std::to_string(peo) + " peo-consistent, 0 skeletal";
}

std::string c7(bool quick) {
    int count = 0, lattices = 0;
    for (int n = 1; n <= (quick ? 4 : 5); ++n)
        for (const auto& d : small_digraphs(n)) {
            auto p = quotient::build_ar_poset(d);
            bool lat = quotient::lattice_tables(p).is_lattice;
            bool vert = quotient::classify(d) >= DigraphClass::vertebrate;
            expect(lat == vert, "lattice property disagrees with vertebrate");
            ++count;
            lattices += lat;
        }
    return std::to_string(count) + " digraphs, " + std::to_string(lattices) + " lattices";
}

std::string c8(bool quick) {
    auto k4 = corpus::transitive_tournament(4);
    io::DigraphFile f{4, k4.arcs()};
    std::ostringstream out, err;
    cli::QuotientConfig cfg;
    cfg.source = "sylvester";
    cfg.output = "perm";
    cfg.certify = true;
    expect(cli::quotient(f, cfg, out, err) == 14, "sylvester quotient of K_4 does not have 14 classes");
    std::set<std::string> got, want;
    std::istringstream lines(out.str());
    for (std::string l; std::getline(lines, l);) got.insert(l);
    for (const auto& pi : all_permutations(4))
        if (!contains_pattern_231(pi)) {
            std::string s;
            for (int i = 1; i <= 4; ++i) s += (i > 1 ? " " : "") + std::to_string(pi[i]);
            want.insert(s);
        }
    expect(got == want, "sylvester representatives are not the 231-avoiders");

    std::mt19937_64 rng(808);
    std::vector<Digraph> skeletal, peo_only;
    for (int n = 3; n <= 5; ++n)
        for (const auto& d : small_digraphs(n)) {
            auto k = quotient::classify(d);
            if (k == DigraphClass::skeletal && d.arc_count() > 1) skeletal.push_back(d);
            if (k == DigraphClass::peo_consistent && n <= 4) peo_only.push_back(d);
        }
    int forced = 0;
    for (int t = 0; t < (quick ? 10 : 50); ++t) {
        const auto& d = skeletal[corpus::bounded(rng, skeletal.size())];
        auto p = quotient::build_ar_poset(d);
        auto lt = quotient::lattice_tables(p);
        auto c = quotient::forcing_closure(p, lt, random_covers(rng, p, 1 + static_cast<int>(corpus::bounded(rng, 3))));
        auto r = certify::quotient_listing(p, c);
        expect(r.ok, "forcing-closure congruence #" + std::to_string(t) + ": " + r.failure);
        ++forced;
    }
    int explicit_count = 0;
    for (const auto& d : peo_only)
        for (int s = 0; s < 3; ++s) {
            auto p = quotient::build_ar_poset(d);
            auto lt = quotient::lattice_tables(p);
            auto c = quotient::generated_congruence(p, lt, random_covers(rng, p, s));
            std::stringstream file;
            io::write_congruence(file, p, c);
            auto back = io::read_congruence(file, p);
            auto r = certify::quotient_listing(p, back);
            expect(r.ok, "explicit partition: " + r.failure);
            ++explicit_count;
        }
    expect(!peo_only.empty(), "no peo-consistent non-skeletal digraphs with n <= 4");
    return "K_4 sylvester 14 classes; " + std::to_string(forced) + " forcing closures; " +
           std::to_string(explicit_count) + " explicit partitions, seed 808";
}

std::string c9(bool quick) {
    std::mt19937_64 rng(99);
    int checked = 0, hexes = 0;
    for (int n = 2; n <= (quick ? 4 : 5); ++n)
        for (const auto& d : small_digraphs(n)) {
            auto order = quotient::peo_consistent_order(d);
            if (!order) continue;
            auto p = quotient::build_ar_poset(d);
            auto lt = quotient::lattice_tables(p);
            int last = order->order.back();
            auto lad = quotient::check_ladders(p, last);
            expect(lad.ok, "ladder: " + lad.failure);
            hexes += lad.hexagons;
            std::vector<quotient::Congruence> cs{quotient::identity_congruence(p), quotient::total_congruence(p)};
            for (int s = 1; s <= 2; ++s) cs.push_back(quotient::generated_congruence(p, lt, random_covers(rng, p, s)));
            for (const auto& c : cs) {
                auto a = quotient::check_projection(p, c, last);
                expect(a.ok, "projection: " + a.failure);
                auto b = quotient::check_rail_intervals(p, c, last);
                expect(b.ok, "rail: " + b.failure);
                ++checked;
            }
        }
    int hyper = 0;
    for (const auto& h : heo_corpus(quick)) {
        expect(is_heo(h) == check_unique_parent_child(h), "HEO and unique parent-child disagree");
        ++hyper;
    }
    return std::to_string(checked) + " congruences, " + std::to_string(hexes) + " hexagon ladders, " +
           std::to_string(hyper) + " hypergraphs, seeds 99 and 77";
}

std::string c10(bool quick) {
    int graphs = 0;
    for (int n = 1; n <= (quick ? 5 : 6); ++n)
        for (const auto& g : corpus::graphs_up_to_iso(n)) {
            auto os = oracle::enumerate_ao_graph(g);
            if (os.size() > 14) continue;
            expect(oracle::check_all_flip_distances(oracle::graph_flip_graph(g, os), os, Exec::parallel),
                   "flip distance differs from the opposite-edge count");
            ++graphs;
        }
    return std::to_string(graphs) + " graphs";
}

}  // namespace

std::vector<Result> run_all(bool quick) {
    const std::vector<std::pair<const char*, std::function<std::string()>>> checks = {
        {"plain changes traces", [] { return c1(); }},
        {"chordal Gray codes certified", [&] { return c2(quick); }},
        {"comparisons per orientation on K_n", [&] { return c3(quick); }},
        {"hypergraph Gray codes certified", [&] { return c4(quick); }},
        {"2-uniform and elimination-forest specialisations", [&] { return c5(quick); }},
        {"class hierarchy", [&] { return c6(quick); }},
        {"lattice iff vertebrate", [&] { return c7(quick); }},
        {"quotient Hamilton paths", [&] { return c8(quick); }},
        {"rail, ladder, projection and parent-child properties", [&] { return c9(quick); }},
        {"flip distance equals opposite-edge count", [&] { return c10(quick); }},
    };
    std::vector<Result> out;
    int id = 0;
    for (const auto& [name, f] : checks) {
        Result r{++id, name, false, "", 0};
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = f();
            r.ok = true;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

bool report(const std::vector<Result>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.ok ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " (" << std::fixed
            << std::setprecision(2) << r.seconds << "s) " << r.detail << '\n';
        all &= r.ok;
    }
    return all;
}

}  // namespace orientgen::selftest
