#include "orientgen/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orientgen/certify.hpp"
#include "orientgen/chordal_ao.hpp"
#include "orientgen/hyper_ao.hpp"
#include "orientgen/oracle.hpp"
#include "orientgen/quotient.hpp"
#include "orientgen/selftest.hpp"

namespace orientgen::cli {

namespace {

Relabeling inverse(const Relabeling& r) { return {r.new_of_old, r.old_of_new}; }

void print_perm(std::ostream& out, const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i) out << (i > 1 ? " " : "") << p[i];
    out << '\n';
}

void require_output(const std::string& got, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (got == a) return;
    throw InvalidInput("unknown output format: " + got);
}

void check(const certify::Report& r, std::ostream& err, const char* what) {
    if (!r.ok) throw CertificationFailure("certification failed: " + r.failure);
    err << "certified " << what << ": " << r.count << " listed, oracle " << r.expected << '\n';
}

PeoOrder choose_peo(const Graph& g, const std::string& mode) {
    if (mode != "auto" && mode != "given") throw InvalidInput("--peo must be auto or given");
    if (is_perfect_elimination_order(g)) {
        PeoOrder id;
        for (int v = 1; v <= g.n(); ++v) id.order.push_back(v);
        return id;
    }
    if (mode == "given") throw InvalidInput("input order is not a perfect elimination order");
    auto p = find_peo(g);
    if (!p) throw InvalidInput("not chordal");
    return *p;
}

std::vector<int> choose_heo(const Hypergraph& h, const std::string& mode) {
    if (mode != "auto" && mode != "given") throw InvalidInput("--order must be auto or given");
    if (is_heo(h)) {
        std::vector<int> id;
        for (int v = 1; v <= h.n(); ++v) id.push_back(v);
        return id;
    }
    if (mode == "given") throw InvalidInput("input order is not a hyperfect elimination order");
    auto o = find_heo(h);
    if (!o) throw InvalidInput("no hyperfect elimination order");
    return *o;
}

}  // namespace

std::size_t ao_graph(const Graph& g, const AoGraphConfig& cfg, std::ostream& out, std::ostream& err) {
    require_output(cfg.output, {"arcs", "perm", "flips", "dot"});
    auto order = choose_peo(g, cfg.peo);
    chordal::SswGenerator gen(g, order, {cfg.output == "perm"});
    auto back = inverse(gen.relabeling());
    auto orig = [&](int v) { return back.new_of_old[v]; };
    std::vector<Mask> path;
    std::size_t count = 0;
    do {
        if (++count > cfg.cap) throw CapExceeded("more orientations than the cap");
        if (cfg.count_only) continue;
        if (cfg.output == "arcs") {
            const auto& d = gen.orientation();
            const auto& es = g.edges();
            for (std::size_t k = 0; k < es.size(); ++k) {
                int u = es[k].u, v = es[k].v;
                int nu = gen.relabeling().new_of_old[u], nv = gen.relabeling().new_of_old[v];
                bool forward = d.has_arc(nu, nv);
                out << (k ? " " : "") << (forward ? u : v) << '>' << (forward ? v : u);
            }
            out << '\n';
        } else if (cfg.output == "perm") {
            print_perm(out, gen.permutation());
        } else if (cfg.output == "flips") {
            if (auto f = gen.last_flip()) out << orig(f->from) << ' ' << orig(f->to) << '\n';
        } else {
            path.push_back(orientation_mask(gen.graph(), gen.orientation()));
        }
    } while (gen.next());
    if (cfg.count_only) out << count << '\n';
    if (cfg.output == "dot" && !cfg.count_only) {
        auto all = oracle::enumerate_ao_graph(g, cfg.cap);
        auto fg = oracle::graph_flip_graph(g, all);
        std::vector<int> ids;
        for (Mask m : path) ids.push_back(static_cast<int>(std::lower_bound(all.begin(), all.end(), m) - all.begin()));
        out << oracle::to_dot(fg, ids);
    }
    if (cfg.counters) {
        const auto& c = gen.counters();
        out << "# visits " << c.visits << " comparisons " << c.comparisons << " flips " << c.flips
            << " matrix_writes " << c.matrix_writes << " comparisons_per_visit " << c.comparisons_per_visit() << '\n';
    }
    if (cfg.certify) check(certify::graph_listing(g, order, cfg.cap), err, "acyclic orientations");
    return count;
}

std::size_t ao_hyper(const Hypergraph& h, const AoHyperConfig& cfg, std::ostream& out, std::ostream& err) {
    require_output(cfg.output, {"heads", "perm", "flips", "dot"});
    auto order = choose_heo(h, cfg.order);
    hyper::HyperGenerator gen(h, order);
    const auto& r = gen.relabeling();
    std::vector<HyperOrientation> path;
    std::size_t count = 0;
    do {
        if (++count > cfg.cap) throw CapExceeded("more orientations than the cap");
        if (cfg.count_only) continue;
        const auto& o = gen.orientation();
        if (cfg.output == "heads") {
            for (std::size_t e = 0; e < o.heads.size(); ++e) out << (e ? " " : "") << r.old_of_new[o.heads[e]];
            out << '\n';
        } else if (cfg.output == "perm") {
            print_perm(out, gen.permutation());
        } else if (cfg.output == "flips") {
            if (auto f = gen.last_flip()) out << r.old_of_new[f->i] << ' ' << r.old_of_new[f->j] << '\n';
        } else {
            HyperOrientation orig{o.heads};
            for (int& v : orig.heads) v = r.old_of_new[v];
            path.push_back(orig);
        }
    } while (gen.next());
    if (cfg.count_only) out << count << '\n';
    if (cfg.output == "dot" && !cfg.count_only) {
        auto all = oracle::enumerate_ao_hyper(h, cfg.cap);
        auto fg = oracle::hyper_flip_graph(h, all);
        std::vector<int> ids;
        for (const auto& o : path)
            ids.push_back(static_cast<int>(std::lower_bound(all.begin(), all.end(), o) - all.begin()));
        out << oracle::to_dot(fg, ids);
    }
    if (cfg.certify) check(certify::hyper_listing(h, order, cfg.cap), err, "hypergraph orientations");
    return count;
}

std::size_t elim_trees(const Graph& g, const ElimConfig& cfg, std::ostream& out, std::ostream& err) {
    require_output(cfg.output, {"forest", "perm"});
    auto order = choose_peo(g, "auto");
    hyper::ElimForestGenerator gen(g, order);
    std::size_t count = 0;
    do {
        ++count;
        if (cfg.count_only) continue;
        if (cfg.output == "forest") {
            auto f = gen.forest();
            for (int v = 1; v <= g.n(); ++v) out << (v > 1 ? " " : "") << f.parent[v];
            out << '\n';
        } else {
            print_perm(out, gen.generator().permutation());
        }
    } while (gen.next());
    if (cfg.count_only) out << count << '\n';
    if (cfg.certify) check(certify::elim_listing(g, order), err, "elimination forests");
    return count;
}

std::size_t quotient(const io::DigraphFile& d, const QuotientConfig& cfg, std::ostream& out, std::ostream& err) {
    require_output(cfg.output, {"classes", "perm", "dot"});
    auto p = quotient::build_ar_poset(d.n, d.arcs, cfg.cap);
    if (!quotient::peo_consistent_order(p.reference())) throw InvalidInput("reference digraph is not peo-consistent");
    auto t = quotient::lattice_tables(p);
    quotient::Congruence c;
    if (cfg.source == "identity") {
        c = quotient::identity_congruence(p);
    } else if (cfg.source == "sylvester") {
        c = quotient::sylvester_congruence(p);
    } else if (cfg.source == "congruence") {
        auto f = io::open_input(cfg.file);
        c = io::read_congruence(f, p);
        if (auto v = quotient::validate_congruence(p, t, c); !v) throw InvalidInput("invalid congruence: " + v.failure);
    } else if (cfg.source == "seeds") {
        auto f = io::open_input(cfg.file);
        auto seeds = io::read_seed_pairs(f, p);
        c = quotient::forcing_closure(p, t, seeds);
        if (auto v = quotient::validate_congruence(p, t, c); !v)
            throw InvalidInput("forcing closure is not a congruence: " + v.failure);
    } else {
        throw InvalidInput("unknown congruence source: " + cfg.source);
    }
    auto path = quotient::generate_quotient_path(p, c);
    if (cfg.output == "classes") {
        for (const auto& v : path) {
            const auto& cls = c.classes[v.class_id];
            for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << io::hex_id(p.elements[cls[i]]);
            out << '\n';
        }
    } else if (cfg.output == "perm") {
        for (const auto& v : path) print_perm(out, v.perm);
    } else {
        auto fg = oracle::quotient_cover_graph(p.elements, c.class_of, c.count());
        std::vector<int> ids;
        for (const auto& v : path) ids.push_back(v.class_id);
        out << oracle::to_dot(fg, ids);
    }
    if (cfg.certify) check(certify::quotient_listing(p, c), err, "quotient classes");
    return path.size();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gray codes for acyclic orientations, hypergraph orientations and lattice quotients", "orientgen"};
    app.require_subcommand(1);
    std::size_t cap = cap_from_env();
    std::string file;

    AoGraphConfig gc;
    auto* ag = app.add_subcommand("ao-graph", "acyclic orientations of a chordal graph");
    ag->add_option("FILE", file, "graph file")->required();
    ag->add_option("--peo", gc.peo, "auto or given");
    ag->add_option("--output", gc.output, "arcs, perm, flips or dot");
    ag->add_flag("--count-only", gc.count_only);
    ag->add_flag("--counters", gc.counters);
    ag->add_flag("--certify", gc.certify);

    AoHyperConfig hc;
    auto* ah = app.add_subcommand("ao-hyper", "acyclic orientations of a hypergraph in hyperfect elimination order");
    ah->add_option("FILE", file, "hypergraph file")->required();
    ah->add_option("--order", hc.order, "auto or given");
    ah->add_option("--output", hc.output, "heads, perm, flips or dot");
    ah->add_flag("--count-only", hc.count_only);
    ah->add_flag("--certify", hc.certify);

    ElimConfig ec;
    auto* et = app.add_subcommand("elim-trees", "elimination forests of a chordal graph");
    et->add_option("GRAPHFILE", file, "graph file")->required();
    et->add_option("--output", ec.output, "forest or perm");
    et->add_flag("--count-only", ec.count_only);
    et->add_flag("--certify", ec.certify);

    QuotientConfig qc;
    std::string cong_file, seed_file;
    bool identity = false, sylvester = false;
    auto* qu = app.add_subcommand("quotient", "Hamilton path through the classes of a lattice congruence");
    qu->add_option("DIGRAPH", file, "digraph file")->required();
    auto* o1 = qu->add_option("--congruence", cong_file, "explicit partition file");
    auto* o2 = qu->add_option("--seed-pairs", seed_file, "pairs closed under the forcing rules");
    auto* o3 = qu->add_flag("--identity", identity);
    auto* o4 = qu->add_flag("--sylvester", sylvester);
    o1->excludes(o2)->excludes(o3)->excludes(o4);
    o2->excludes(o3)->excludes(o4);
    o3->excludes(o4);
    qu->add_option("--output", qc.output, "classes, perm or dot");
    qu->add_flag("--certify", qc.certify);

    auto* cl = app.add_subcommand("classify", "finest class of a digraph");
    cl->add_option("DIGRAPH", file)->required();
    auto* pe = app.add_subcommand("peo", "perfect elimination order of a graph");
    pe->add_option("GRAPHFILE", file)->required();
    auto* he = app.add_subcommand("heo", "hyperfect elimination order of a hypergraph");
    he->add_option("FILE", file)->required();
    bool as_hyper = false;
    auto* fg = app.add_subcommand("flipgraph", "flip graph as DOT");
    fg->add_option("FILE", file)->required();
    fg->add_flag("--hyper", as_hyper, "read a hypergraph file");
    auto* bs = app.add_subcommand("building-set", "graphical building set of a graph");
    bs->add_option("GRAPHFILE", file)->required();
    bool quick = false;
    auto* st = app.add_subcommand("selftest", "run the acceptance checks");
    st->add_flag("--quick", quick);

    std::vector<std::string> argv_s{"orientgen"};
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_s) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ag->parsed()) {
            gc.cap = cap;
            ao_graph(io::read_graph_file(file), gc, out, err);
        } else if (ah->parsed()) {
            hc.cap = cap;
            ao_hyper(io::read_hypergraph_file(file), hc, out, err);
        } else if (et->parsed()) {
            elim_trees(io::read_graph_file(file), ec, out, err);
        } else if (qu->parsed()) {
            qc.cap = cap;
            if (!cong_file.empty()) {
                qc.source = "congruence";
                qc.file = cong_file;
            } else if (!seed_file.empty()) {
                qc.source = "seeds";
                qc.file = seed_file;
            } else if (sylvester) {
                qc.source = "sylvester";
            } else {
                qc.source = "identity";
            }
            quotient(io::read_digraph_file(file), qc, out, err);
        } else if (cl->parsed()) {
            out << quotient::to_string(quotient::classify(io::read_digraph_file(file).digraph())) << '\n';
        } else if (pe->parsed()) {
            auto p = find_peo(io::read_graph_file(file));
            if (!p) throw InvalidInput("not chordal");
            for (std::size_t i = 0; i < p->order.size(); ++i) out << (i ? " " : "") << p->order[i];
            out << '\n';
        } else if (he->parsed()) {
            auto o = find_heo(io::read_hypergraph_file(file));
            if (!o) throw InvalidInput("no hyperfect elimination order");
            for (std::size_t i = 0; i < o->size(); ++i) out << (i ? " " : "") << (*o)[i];
            out << '\n';
        } else if (fg->parsed()) {
            if (as_hyper) {
                auto h = io::read_hypergraph_file(file);
                out << oracle::to_dot(oracle::hyper_flip_graph(h, oracle::enumerate_ao_hyper(h, cap)), {});
            } else {
                auto g = io::read_graph_file(file);
                out << oracle::to_dot(oracle::graph_flip_graph(g, oracle::enumerate_ao_graph(g, cap)), {});
            }
        } else if (bs->parsed()) {
            io::write_hypergraph(out, graphical_building_set(io::read_graph_file(file)));
        } else if (st->parsed()) {
            return selftest::report(selftest::run_all(quick), out) ? 0 : 1;
        }
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return 2;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return 1;
    } catch (const CertificationFailure& e) {
        err << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace orientgen::cli
