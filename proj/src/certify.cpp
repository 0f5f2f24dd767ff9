#include "orientgen/certify.hpp"

#include <algorithm>

#include "orientgen/chordal_ao.hpp"
#include "orientgen/hyper_ao.hpp"
#include "orientgen/jump.hpp"
#include "orientgen/oracle.hpp"

namespace orientgen::certify {

namespace {

std::string step_name(std::size_t k) { return "step " + std::to_string(k); }

}  // namespace

Report graph_listing(const Graph& g, const PeoOrder& order, std::size_t cap) {
    Report r;
    chordal::SswGenerator gen(g, order);
    const Graph& h = gen.graph();
    auto all = oracle::enumerate_ao_graph(h, cap);
    r.expected = all.size();
    std::vector<Mask> seen;
    Digraph prev = gen.orientation();
    seen.push_back(orientation_mask(h, prev));
    while (gen.next()) {
        if (seen.size() >= cap) throw CapExceeded("listing longer than the cap");
        const Digraph& cur = gen.orientation();
        Mask m = orientation_mask(h, cur);
        if (popcount(m ^ seen.back()) != 1) r.fail(step_name(seen.size()) + " changes more than one arc");
        auto f = gen.last_flip();
        if (!f || !cur.has_arc(f->from, f->to) || !prev.has_arc(f->to, f->from))
            r.fail(step_name(seen.size()) + " reports the wrong arc");
        else {
            auto tr = transitive_reduction(prev);
            if (std::find(tr.begin(), tr.end(), Arc{f->to, f->from}) == tr.end())
                r.fail(step_name(seen.size()) + " flips an arc outside the transitive reduction");
        }
        seen.push_back(m);
        prev = cur;
    }
    r.count = seen.size();
    std::sort(seen.begin(), seen.end());
    if (seen != all) r.fail("listing is not the set of acyclic orientations");
    return r;
}

Report hyper_listing(const Hypergraph& h, std::span<const int> heo, std::size_t cap) {
    Report r;
    hyper::HyperGenerator gen(h, heo);
    const Hypergraph& hh = gen.hypergraph();
    auto all = oracle::enumerate_ao_hyper(hh, cap);
    r.expected = all.size();
    std::vector<Permutation> enc;
    for (const auto& o : all) enc.push_back(hyper::encode(hh, o));
    auto want = algorithm_j(LanguageOracle::from_set(hh.n(), enc), std::nullopt, cap);
    std::vector<HyperOrientation> seen{gen.orientation()};
    std::vector<Permutation> trace{gen.permutation()};
    while (gen.next()) {
        if (seen.size() >= cap) throw CapExceeded("listing longer than the cap");
        auto f = gen.last_flip();
        auto expect = f ? pair_flip(hh, seen.back(), f->i, f->j) : std::nullopt;
        if (!expect || *expect != gen.orientation()) r.fail(step_name(seen.size()) + " is not a pair flip");
        seen.push_back(gen.orientation());
        trace.push_back(gen.permutation());
    }
    r.count = seen.size();
    if (trace != want) r.fail("encoding trace differs from Algorithm J");
    std::sort(seen.begin(), seen.end());
    if (seen != all) r.fail("listing is not the set of acyclic orientations");
    return r;
}

Report elim_listing(const Graph& g, const PeoOrder& order) {
    Report r;
    if (g.n() > 8) throw CapExceeded("rotation-graph oracle enumerates n! permutations; n > 8");
    auto rg = oracle::rotation_graph(g);
    r.expected = rg.forests.size();
    hyper::ElimForestGenerator gen(g, order);
    std::vector<int> path;
    do {
        auto f = gen.forest();
        auto it = std::lower_bound(rg.forests.begin(), rg.forests.end(), f);
        if (it == rg.forests.end() || *it != f) {
            r.fail(step_name(path.size()) + " is not an elimination forest");
            break;
        }
        path.push_back(static_cast<int>(it - rg.forests.begin()));
    } while (gen.next());
    r.count = path.size();
    if (r.ok) {
        auto c = oracle::certify_hamilton_path(rg.graph, path);
        if (!c.ok) r.fail(c.failure);
    }
    return r;
}

Report quotient_listing(const quotient::ARPoset& p, const quotient::Congruence& c) {
    Report r;
    auto t = quotient::lattice_tables(p);
    if (auto v = quotient::validate_congruence(p, t, c); !v) return r.fail(v.failure);
    r.expected = c.count();
    auto path = quotient::generate_quotient_path(p, c);
    std::vector<int> ids;
    for (const auto& v : path) {
        if (c.class_of[p.index_of(v.reorientation)] != v.class_id) r.fail("representative outside its class");
        ids.push_back(v.class_id);
    }
    r.count = ids.size();
    auto cert = oracle::certify_hamilton_path(oracle::quotient_cover_graph(p.elements, c.class_of, c.count()), ids);
    if (!cert.ok) r.fail(cert.failure);
    return r;
}

}  // namespace orientgen::certify
