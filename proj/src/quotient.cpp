#include "orientgen/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>

#include "orientgen/chordal_ao.hpp"
#include "orientgen/oracle.hpp"

namespace orientgen::quotient {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
    bool same(int a, int b) { return find(a) == find(b); }
};

struct Adjacency {
    int n = 0;
    std::vector<Mask> out, in;
};

Adjacency adjacency(const Digraph& d) {
    if (d.n() > 62) throw InvalidInput("digraph too large");
    Adjacency a{d.n(), std::vector<Mask>(d.n() + 1, 0), std::vector<Mask>(d.n() + 1, 0)};
    for (auto arc : d.arcs()) {
        a.out[arc.from] |= bit(arc.to);
        a.in[arc.to] |= bit(arc.from);
    }
    return a;
}

Mask all_vertices(int n) {
    Mask m = 0;
    for (int v = 1; v <= n; ++v) m |= bit(v);
    return m;
}

// desc[v]: vertices reachable from v by a path of length >= 1 inside s.
std::vector<Mask> descendants(const Adjacency& a, std::span<const int> topo, Mask s) {
    std::vector<Mask> desc(a.n + 1, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int v = *it;
        if (!(s & bit(v))) continue;
        Mask o = a.out[v] & s, r = o;
        for (Mask t = o; t; t &= t - 1) r |= desc[std::countr_zero(t)];
        desc[v] = r;
    }
    return desc;
}

Congruence from_dsu(Dsu& d, int n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = d.find(i);
    return make_congruence(labels);
}

// Fold joins/meets over a class; -1 if undefined.
std::pair<int, int> class_bounds(const LatticeTables& t, std::span<const int> cls, int n) {
    int lo = cls[0], hi = cls[0];
    for (int x : cls) {
        if (lo >= 0) lo = t.meet_of(lo, x, n);
        if (hi >= 0) hi = t.join_of(hi, x, n);
    }
    return {lo, hi};
}

bool merge_intervals(const ARPoset& p, const LatticeTables& t, Dsu& dsu) {
    int n = p.size();
    auto c = from_dsu(dsu, n);
    bool changed = false;
    for (const auto& cls : c.classes) {
        if (cls.size() < 2) continue;
        auto [lo, hi] = class_bounds(t, cls, n);
        for (int k = 0; k < n; ++k)
            if (p.leq(lo, k) && p.leq(k, hi)) changed |= dsu.unite(cls[0], k);
    }
    return changed;
}

}  // namespace

std::string_view to_string(DigraphClass c) {
    switch (c) {
        case DigraphClass::not_acyclic: return "not_acyclic";
        case DigraphClass::acyclic: return "acyclic";
        case DigraphClass::vertebrate: return "vertebrate";
        case DigraphClass::peo_consistent: return "peo_consistent";
        case DigraphClass::skeletal: return "skeletal";
    }
    return "?";
}

bool is_vertebrate(const Digraph& d) {
    if (!is_acyclic(d)) return false;
    int n = d.n();
    if (n > 20) throw CapExceeded("vertebrate check is exhaustive over induced subdigraphs; n > 20");
    auto a = adjacency(d);
    auto topo = topological_order(d);
    Mask full = all_vertices(n);
    std::vector<int> uf(n + 1);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (Mask s = full; s; s = (s - 1) & full) {
        if (popcount(s) < 3) continue;
        auto desc = descendants(a, topo, s);
        std::iota(uf.begin(), uf.end(), 0);
        for (Mask t = s; t; t &= t - 1) {
            int u = std::countr_zero(t);
            Mask o = a.out[u] & s, covered = 0;
            for (Mask q = o; q; q &= q - 1) covered |= desc[std::countr_zero(q)];
            for (Mask q = o & ~covered; q; q &= q - 1) {
                int w = std::countr_zero(q);
                int x = find(u), y = find(w);
                if (x == y) return false;
                uf[x] = y;
            }
        }
    }
    return true;
}

bool is_filled(const Digraph& d) {
    if (!is_acyclic(d)) return false;
    auto a = adjacency(d);
    auto topo = topological_order(d);
    auto desc = descendants(a, topo, all_vertices(d.n()));
    std::vector<Mask> anc(d.n() + 1, 0);
    for (int v = 1; v <= d.n(); ++v)
        for (Mask t = desc[v]; t; t &= t - 1) anc[std::countr_zero(t)] |= bit(v);
    for (auto arc : d.arcs()) {
        Mask between = (desc[arc.from] & anc[arc.to]) | bit(arc.from) | bit(arc.to);
        for (Mask t = between; t; t &= t - 1) {
            int x = std::countr_zero(t);
            if ((desc[x] & between) & ~a.out[x]) return false;
        }
    }
    return true;
}

bool is_skeletal(const Digraph& d) { return is_vertebrate(d) && is_filled(d); }

std::optional<PeoOrder> peo_consistent_order(const Digraph& d) {
    if (!is_acyclic(d)) return std::nullopt;
    auto a = adjacency(d);
    int n = d.n();
    Mask alive = all_vertices(n);
    std::vector<int> rev;
    while (alive) {
        int pick = 0;
        for (int v = n; v >= 1 && !pick; --v) {
            if (!(alive & bit(v))) continue;
            Mask o = a.out[v] & alive, i = a.in[v] & alive;
            if (o && i) continue;
            Mask nb = o | i;
            bool clique = true;
            for (Mask t = nb; t && clique; t &= t - 1) {
                int x = std::countr_zero(t);
                if ((nb & ~bit(x)) & ~(a.out[x] | a.in[x])) clique = false;
            }
            if (clique) pick = v;
        }
        if (!pick) return std::nullopt;
        rev.push_back(pick);
        alive &= ~bit(pick);
    }
    return PeoOrder{std::vector<int>(rev.rbegin(), rev.rend())};
}

DigraphClass classify(const Digraph& d) {
    if (!is_acyclic(d)) return DigraphClass::not_acyclic;
    if (!is_vertebrate(d)) return DigraphClass::acyclic;
    if (is_filled(d)) return DigraphClass::skeletal;
    if (peo_consistent_order(d)) return DigraphClass::peo_consistent;
    return DigraphClass::vertebrate;
}

int ARPoset::index_of(Mask m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    return it != elements.end() && *it == m ? static_cast<int>(it - elements.begin()) : -1;
}

Digraph ARPoset::digraph(Mask flipped) const {
    Digraph d(n);
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a) {
        if (!(active_arcs & bit(a))) continue;
        if (flipped & bit(a))
            d.add_arc(arcs[a].to, arcs[a].from);
        else
            d.add_arc(arcs[a].from, arcs[a].to);
    }
    return d;
}

Mask ARPoset::arcs_at(int v) const {
    Mask m = 0;
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a)
        if ((active_arcs & bit(a)) && (arcs[a].from == v || arcs[a].to == v)) m |= bit(a);
    return m;
}

ARPoset build_ar_poset(int n, std::span<const Arc> arcs, std::size_t cap) {
    if (arcs.size() > 63) throw InvalidInput("more than 63 arcs");
    ARPoset p;
    p.n = n;
    p.arcs.assign(arcs.begin(), arcs.end());
    Digraph d(n);
    for (auto a : arcs) {
        if (a.from < 1 || a.to < 1 || a.from > n || a.to > n || a.from == a.to)
            throw InvalidInput("arc endpoint out of range");
        if (d.has_arc(a.from, a.to) || d.has_arc(a.to, a.from)) throw InvalidInput("repeated arc");
        d.add_arc(a.from, a.to);
    }
    if (!is_acyclic(d)) throw InvalidInput("reference digraph has a cycle");
    p.vertices = all_vertices(n);
    return sub_poset(p, p.vertices, cap);
}

ARPoset build_ar_poset(const Digraph& d, std::size_t cap) {
    auto arcs = d.arcs();
    return build_ar_poset(d.n(), arcs, cap);
}

ARPoset sub_poset(const ARPoset& p, Mask vertices, std::size_t cap) {
    ARPoset q;
    q.n = p.n;
    q.arcs = p.arcs;
    q.vertices = vertices & all_vertices(p.n);
    Graph g(p.n);
    std::vector<int> global;
    Mask native = 0;  // arcs pointing from the larger to the smaller label
    for (int a = 0; a < static_cast<int>(p.arcs.size()); ++a) {
        auto [x, y] = p.arcs[a];
        if (!(q.vertices & bit(x)) || !(q.vertices & bit(y))) continue;
        q.active_arcs |= bit(a);
        if (x > y) native |= bit(static_cast<int>(global.size()));
        global.push_back(a);
        g.add_edge(x, y);
    }
    auto local = oracle::enumerate_ao_graph(g, cap);
    q.elements.reserve(local.size());
    for (Mask m : local) {
        Mask r = m ^ native, e = 0;
        for (; r; r &= r - 1) e |= bit(global[std::countr_zero(r)]);
        q.elements.push_back(e);
    }
    std::sort(q.elements.begin(), q.elements.end());
    int s = q.size();
    q.up.assign(s, {});
    q.down.assign(s, {});
    for (int i = 0; i < s; ++i)
        for (Mask free = q.active_arcs & ~q.elements[i]; free; free &= free - 1) {
            int j = q.index_of(q.elements[i] | (free & -free));
            if (j < 0) continue;
            q.up[i].push_back(j);
            q.down[j].push_back(i);
        }
    for (auto& v : q.down) std::sort(v.begin(), v.end());
    return q;
}

LatticeTables lattice_tables(const ARPoset& p, Exec exec) {
    int n = p.size();
    LatticeTables t;
    t.join.assign(static_cast<std::size_t>(n) * n, -1);
    t.meet.assign(static_cast<std::size_t>(n) * n, -1);
    const auto& e = p.elements;
    auto row = [&](int i) {
        for (int j = i; j < n; ++j) {
            Mask u = e[i] | e[j], l = e[i] & e[j];
            Mask up = ~Mask{0}, lo = 0;
            for (int k = 0; k < n; ++k) {
                if ((u & ~e[k]) == 0) up &= e[k];
                if ((e[k] & ~l) == 0) lo |= e[k];
            }
            int jn = p.index_of(up), mt = p.index_of(lo);
            t.join[static_cast<std::size_t>(i) * n + j] = t.join[static_cast<std::size_t>(j) * n + i] = jn;
            t.meet[static_cast<std::size_t>(i) * n + j] = t.meet[static_cast<std::size_t>(j) * n + i] = mt;
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (int i = 0; i < n; ++i) row(i);
    } else {
        for (int i = 0; i < n; ++i) row(i);
    }
    t.is_lattice = true;
    for (int i = 0; i < n && t.is_lattice; ++i)
        for (int j = i; j < n; ++j)
            if (t.join_of(i, j, n) < 0 || t.meet_of(i, j, n) < 0) {
                t.is_lattice = false;
                t.witness = {i, j};
                break;
            }
    return t;
}

Congruence make_congruence(std::span<const int> labels) {
    Congruence c;
    c.class_of.assign(labels.size(), -1);
    std::map<int, int> id;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, fresh] = id.emplace(labels[i], static_cast<int>(c.classes.size()));
        if (fresh) c.classes.emplace_back();
        c.class_of[i] = it->second;
        c.classes[it->second].push_back(static_cast<int>(i));
    }
    return c;
}

Congruence identity_congruence(const ARPoset& p) {
    std::vector<int> l(p.size());
    std::iota(l.begin(), l.end(), 0);
    return make_congruence(l);
}

Congruence total_congruence(const ARPoset& p) { return make_congruence(std::vector<int>(p.size(), 0)); }

Check validate_congruence(const ARPoset& p, const LatticeTables& t, const Congruence& c, Exec exec) {
    int n = p.size();
    if (!t.is_lattice) return {false, "reorientation poset is not a lattice"};
    if (static_cast<int>(c.class_of.size()) != n) return {false, "partition does not cover the poset"};
    for (int k = 0; k < c.count(); ++k) {
        const auto& cls = c.classes[k];
        if (cls.empty()) return {false, "empty class"};
        auto [lo, hi] = class_bounds(t, cls, n);
        if (c.class_of[lo] != k || c.class_of[hi] != k) return {false, "class " + std::to_string(k) + " has no bottom or top"};
        for (int x = 0; x < n; ++x)
            if (p.leq(lo, x) && p.leq(x, hi) && c.class_of[x] != k)
                return {false, "class " + std::to_string(k) + " is not an interval"};
    }
    std::atomic<int> bad{-1};
    auto check = [&](int x) {
        int r = c.classes[c.class_of[x]][0];
        if (r == x) return;
        for (int y = 0; y < n; ++y)
            if (c.class_of[t.join_of(x, y, n)] != c.class_of[t.join_of(r, y, n)] ||
                c.class_of[t.meet_of(x, y, n)] != c.class_of[t.meet_of(r, y, n)]) {
                int expect = -1;
                bad.compare_exchange_strong(expect, x);
                return;
            }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (int x = 0; x < n; ++x) check(x);
    } else {
        for (int x = 0; x < n && bad < 0; ++x) check(x);
    }
    if (bad >= 0) return {false, "joins or meets not respected at element " + std::to_string(bad.load())};
    return {true, ""};
}

Congruence generated_congruence(const ARPoset& p, const LatticeTables& t, std::span<const std::pair<int, int>> seeds) {
    if (!t.is_lattice) throw InvalidInput("reorientation poset is not a lattice");
    int n = p.size();
    Dsu dsu(n);
    for (auto [a, b] : seeds) dsu.unite(a, b);
    for (bool changed = true; changed;) {
        changed = merge_intervals(p, t, dsu);
        for (int x = 0; x < n; ++x) {
            int r = dsu.find(x);
            if (r == x) continue;
            for (int y = 0; y < n; ++y) {
                changed |= dsu.unite(t.join_of(x, y, n), t.join_of(r, y, n));
                changed |= dsu.unite(t.meet_of(x, y, n), t.meet_of(r, y, n));
            }
        }
    }
    return from_dsu(dsu, n);
}

std::vector<Polygon> polygons(const ARPoset& p, const LatticeTables& t) {
    int n = p.size();
    std::vector<Polygon> out;
    auto next_in = [&](int x, int top) {
        int found = -1;
        for (int y : p.up[x])
            if (p.leq(y, top)) {
                if (found >= 0) return -1;
                found = y;
            }
        return found;
    };
    for (int a = 0; a < n; ++a)
        for (std::size_t i = 0; i < p.up[a].size(); ++i)
            for (std::size_t j = i + 1; j < p.up[a].size(); ++j) {
                int b = p.up[a][i], c = p.up[a][j];
                int top = t.join_of(b, c, n);
                if (top < 0) continue;
                int size = 0;
                for (int k = 0; k < n; ++k) size += p.leq(a, k) && p.leq(k, top);
                std::vector<int> l{a, b}, r{a, c};
                while (l.back() != top && l.size() < 5) l.push_back(next_in(l.back(), top));
                while (r.back() != top && r.size() < 5) r.push_back(next_in(r.back(), top));
                if (l.size() != r.size() || l.back() != top || r.back() != top) continue;
                if (static_cast<int>(l.size() + r.size()) - 2 != size) continue;
                if (size == 4 || size == 6) out.push_back({std::move(l), std::move(r)});
            }
    return out;
}

Congruence forcing_closure(const ARPoset& p, const LatticeTables& t, std::span<const std::pair<int, int>> seeds) {
    if (!is_skeletal(p.reference())) throw InvalidInput("forcing closure needs a skeletal reference");
    int n = p.size();
    auto polys = polygons(p, t);
    Dsu dsu(n);
    for (auto [a, b] : seeds) dsu.unite(a, b);
    for (bool changed = true; changed;) {
        changed = merge_intervals(p, t, dsu);
        for (const auto& q : polys) {
            const auto& l = q.left;
            const auto& r = q.right;
            if (!q.hexagon()) {
                if (dsu.same(l[0], r[1]) != dsu.same(l[1], l[2]))
                    changed |= dsu.unite(l[0], r[1]) | dsu.unite(l[1], l[2]);
                if (dsu.same(l[0], l[1]) != dsu.same(r[1], r[2]))
                    changed |= dsu.unite(l[0], l[1]) | dsu.unite(r[1], r[2]);
                continue;
            }
            // bottom edge forces the two far sides of the hexagon
            if (dsu.same(l[0], r[1]) || dsu.same(l[2], l[3]))
                changed |= dsu.unite(l[0], r[1]) | dsu.unite(r[1], r[2]) | dsu.unite(l[1], l[2]) | dsu.unite(l[2], l[3]);
            if (dsu.same(l[0], l[1]) || dsu.same(r[2], r[3]))
                changed |= dsu.unite(l[0], l[1]) | dsu.unite(l[1], l[2]) | dsu.unite(r[1], r[2]) | dsu.unite(r[2], r[3]);
        }
    }
    return from_dsu(dsu, n);
}

Congruence sylvester_congruence(const ARPoset& p) {
    auto ref = p.reference();
    std::vector<int> active;
    for (int v = 1; v <= p.n; ++v)
        if (p.vertices & bit(v)) active.push_back(v);
    int k = static_cast<int>(active.size());
    for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j)
            if (!ref.has_arc(active[i], active[j]) && !ref.has_arc(active[j], active[i]))
                throw InvalidInput("sylvester congruence needs a tournament");
    std::vector<int> value(p.n + 1, 0);
    for (int v : active) value[v] = ref.in_degree(v) + 1;
    int n = p.size();
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> perm(n);
    for (int x = 0; x < n; ++x) {
        auto d = p.digraph(p.elements[x]);
        perm[x].assign(k, 0);
        for (int v : active) perm[x][d.in_degree(v)] = value[v];
        index[perm[x]] = x;
    }
    Dsu dsu(n);
    for (int x = 0; x < n; ++x) {
        auto s = perm[x];
        for (int i = 1; i + 1 < k; ++i) {
            int c = s[i], a = s[i + 1];
            // some b with a < b < c occurs before position i
            if (a < c) {
                bool has = false;
                for (int q = 0; q < i && !has; ++q) has = s[q] > a && s[q] < c;
                if (has) {
                    std::swap(s[i], s[i + 1]);
                    dsu.unite(x, index.at(s));
                    std::swap(s[i], s[i + 1]);
                }
            }
        }
    }
    return from_dsu(dsu, n);
}

std::pair<ARPoset, Congruence> restriction(const ARPoset& p, const Congruence& c, int v) {
    auto q = sub_poset(p, p.vertices & ~bit(v));
    std::vector<int> labels(q.size());
    for (int i = 0; i < q.size(); ++i) {
        int j = p.index_of(q.elements[i]);
        if (j < 0) throw std::logic_error("restricted element missing from the poset");
        labels[i] = c.class_of[j];
    }
    return {std::move(q), make_congruence(labels)};
}

std::vector<Rail> rails(const ARPoset& p, int v) {
    Mask at = p.arcs_at(v);
    std::map<Mask, std::vector<int>> groups;
    for (int i = 0; i < p.size(); ++i) groups[p.elements[i] & ~at].push_back(i);
    std::vector<Rail> out;
    for (auto& [base, idx] : groups) {
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return popcount(p.elements[a]) < popcount(p.elements[b]); });
        for (std::size_t k = 0; k + 1 < idx.size(); ++k)
            if (!p.leq(idx[k], idx[k + 1]) || popcount(p.elements[idx[k + 1]]) != popcount(p.elements[idx[k]]) + 1)
                throw std::logic_error("rail is not a saturated chain");
        out.push_back({base, idx});
    }
    return out;
}

LadderReport check_ladders(const ARPoset& p, int v) {
    LadderReport rep;
    auto rs = rails(p, v);
    std::map<Mask, int> by_base;
    for (int i = 0; i < static_cast<int>(rs.size()); ++i) by_base[rs[i].base] = i;
    std::size_t len = rs.empty() ? 0 : rs[0].chain.size();
    if (len != static_cast<std::size_t>(popcount(p.arcs_at(v))) + 1) {
        rep.failure = "rail length differs from degree + 1";
        return rep;
    }
    for (const auto& r : rs) {
        if (r.chain.size() != len) {
            rep.failure = "rails of different lengths";
            return rep;
        }
        for (Mask free = p.active_arcs & ~p.arcs_at(v) & ~r.base; free; free &= free - 1) {
            Mask a = free & -free;
            auto it = by_base.find(r.base | a);
            if (it == by_base.end()) continue;
            const auto& s = rs[it->second];
            ++rep.ladders;
            std::vector<std::pair<int, int>> stairs;
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t j = 0; j < len; ++j)
                    if (p.elements[s.chain[j]] == (p.elements[r.chain[i]] | a))
                        stairs.push_back({static_cast<int>(i), static_cast<int>(j)});
            int last = static_cast<int>(len) - 1;
            if (stairs.front() != std::pair{0, 0} || stairs.back() != std::pair{last, last}) {
                rep.failure = "ladder does not start and end with a stair";
                return rep;
            }
            int hex = 0;
            for (std::size_t k = 0; k + 1 < stairs.size(); ++k) {
                int di = stairs[k + 1].first - stairs[k].first, dj = stairs[k + 1].second - stairs[k].second;
                if (di == 2 && dj == 2)
                    ++hex;
                else if (di != 1 || dj != 1) {
                    rep.failure = "interval between stairs is neither a diamond nor a hexagon";
                    return rep;
                }
            }
            int arc = std::countr_zero(a);
            bool triangle = (p.arcs_at(v) & p.arcs_at(p.arcs[arc].from)) && (p.arcs_at(v) & p.arcs_at(p.arcs[arc].to));
            if (hex > 1 || (hex == 1) != triangle) {
                rep.failure = "unexpected hexagon count in a ladder";
                return rep;
            }
            rep.hexagons += hex;
        }
    }
    rep.ok = true;
    return rep;
}

Check check_rail_intervals(const ARPoset& p, const Congruence& c, int v) {
    for (const auto& r : rails(p, v)) {
        std::vector<int> seen;
        for (int x : r.chain) {
            int k = c.class_of[x];
            if (!seen.empty() && seen.back() == k) continue;
            if (std::find(seen.begin(), seen.end(), k) != seen.end())
                return {false, "class " + std::to_string(k) + " meets a rail in a non-interval"};
            seen.push_back(k);
        }
    }
    return {true, ""};
}

Check check_projection(const ARPoset& p, const Congruence& c, int v) {
    auto [q, cs] = restriction(p, c, v);
    Mask at = p.arcs_at(v);
    for (int k = 0; k < c.count(); ++k) {
        std::vector<int> proj;
        for (int x : c.classes[k]) proj.push_back(q.index_of(p.elements[x] & ~at));
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        if (proj.front() < 0) return {false, "projection leaves the restricted poset"};
        if (proj != cs.classes[cs.class_of[proj.front()]])
            return {false, "projection of class " + std::to_string(k) + " is not a restricted class"};
    }
    return {true, ""};
}

Representatives select_representatives(const ARPoset& p, const Congruence& c) {
    if (p.vertices != all_vertices(p.n)) throw InvalidInput("representatives need the full poset");
    if (static_cast<int>(c.class_of.size()) != p.size()) throw InvalidInput("partition does not cover the poset");
    auto ref = p.reference();
    auto order = peo_consistent_order(ref);
    if (!order) throw InvalidInput("reference digraph is not peo-consistent");
    int n = p.n;
    const auto& ord = order->order;
    std::vector<ARPoset> level(n + 1);
    std::vector<Congruence> cong(n + 1);
    level[n] = p;
    cong[n] = c;
    for (int k = n; k >= 1; --k) std::tie(level[k - 1], cong[k - 1]) = restriction(level[k], cong[k], ord[k - 1]);

    Representatives out;
    out.order = *order;
    out.relabeling = Relabeling::from_order(ord);
    out.graph = relabel(underlying_graph(ref), out.relabeling);
    std::vector<Mask> r{0};
    for (int k = 1; k <= n; ++k) {
        const auto& q = level[k];
        const auto& ck = cong[k];
        int v = ord[k - 1];
        auto rs = rails(q, v);
        int split = 0;
        for (const auto& rail : rs) split += ck.class_of[rail.chain.front()] != ck.class_of[rail.chain.back()];
        if (split != 0 && split != static_cast<int>(rs.size()))
            throw InvalidInput("rail dichotomy fails at level " + std::to_string(k) + "; not a lattice congruence");
        RailRule rule = split ? RailRule::rd1 : RailRule::rd2;
        out.rules.push_back(rule);
        bool sink = true;
        for (Mask t = q.arcs_at(v); t; t &= t - 1) sink &= q.arcs[std::countr_zero(t)].to == v;
        std::map<Mask, const Rail*> by_base;
        for (const auto& rail : rs) by_base[rail.base] = &rail;
        std::vector<Mask> next;
        for (Mask e : r) {
            const auto& chain = by_base.at(e)->chain;
            if (rule == RailRule::rd2) {
                next.push_back(q.elements[sink ? chain.front() : chain.back()]);
                continue;
            }
            int top_class = ck.class_of[chain.back()];
            for (std::size_t i = 0; i < chain.size(); ++i) {
                int k2 = ck.class_of[chain[i]];
                if (i > 0 && ck.class_of[chain[i - 1]] == k2) continue;
                next.push_back(q.elements[k2 == top_class ? chain.back() : chain[i]]);
            }
        }
        r = std::move(next);
    }
    out.reps.assign(c.count(), 0);
    std::vector<int> hits(c.count(), 0);
    for (Mask m : r) {
        int k = c.class_of[p.index_of(m)];
        ++hits[k];
        out.reps[k] = m;
    }
    for (int h : hits)
        if (h != 1) throw InvalidInput("representatives do not hit every class once; not a lattice congruence");
    for (Mask m : out.reps) out.perms.push_back(chordal::encode(out.graph, relabel(p.digraph(m), out.relabeling)));
    return out;
}

QuotientGenerator::QuotientGenerator(const ARPoset& p, const Congruence& c)
    : p_(&p), c_(&c), reps_(select_representatives(p, c)) {
    std::vector<int> idx(reps_.perms.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return reps_.perms[a] < reps_.perms[b]; });
    for (int i : idx) {
        sorted_.push_back(reps_.perms[i]);
        rep_of_sorted_.push_back(i);
    }
    gen_.emplace(LanguageOracle::from_set(p.n, sorted_));
    load();
}

void QuotientGenerator::load() {
    const auto& pi = gen_->current();
    auto it = std::lower_bound(sorted_.begin(), sorted_.end(), pi);
    int k = rep_of_sorted_[it - sorted_.begin()];
    cur_ = {reps_.reps[k], k, pi};
}

bool QuotientGenerator::next() {
    if (!gen_->next()) return false;
    load();
    return true;
}

std::vector<QuotientVisit> generate_quotient_path(const ARPoset& p, const Congruence& c) {
    QuotientGenerator gen(p, c);
    std::vector<QuotientVisit> out;
    do out.push_back(gen.current());
    while (gen.next());
    if (static_cast<int>(out.size()) != c.count()) throw std::logic_error("quotient listing missed classes");
    return out;
}

}  // namespace orientgen::quotient
