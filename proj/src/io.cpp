#include "orientgen/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace orientgen::io {

namespace {

// Non-comment lines, split into tokens, with line numbers for diagnostics.
struct Lines {
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    std::size_t at = 0;

    explicit Lines(std::istream& in) {
        std::string line;
        int no = 0;
        while (std::getline(in, line)) {
            ++no;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ss(line);
            std::vector<std::string> tok;
            for (std::string t; ss >> t;) tok.push_back(t);
            if (!tok.empty()) rows.push_back({no, std::move(tok)});
        }
    }
    bool done() const { return at >= rows.size(); }
    const std::vector<std::string>& next(const char* what) {
        if (done()) throw InvalidInput(std::string("unexpected end of input, expected ") + what);
        return rows[at++].second;
    }
    int line() const { return at ? rows[at - 1].first : 0; }
};

int to_int(const std::string& s, const Lines& l) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size()) throw InvalidInput("line " + std::to_string(l.line()) + ": not an integer: " + s);
    return v;
}

std::pair<int, int> header(Lines& l) {
    const auto& h = l.next("header `n m`");
    if (h.size() != 2) throw InvalidInput("line " + std::to_string(l.line()) + ": header must be `n m`");
    int n = to_int(h[0], l), m = to_int(h[1], l);
    if (n < 0 || m < 0) throw InvalidInput("negative size in header");
    return {n, m};
}

std::pair<int, int> pair_line(Lines& l, int n) {
    const auto& t = l.next("a pair `i j`");
    if (t.size() != 2) throw InvalidInput("line " + std::to_string(l.line()) + ": expected `i j`");
    int i = to_int(t[0], l), j = to_int(t[1], l);
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw InvalidInput("line " + std::to_string(l.line()) + ": bad vertex pair");
    return {i, j};
}

void trailing(const Lines& l) {
    if (!l.done()) throw InvalidInput("trailing content after the declared entries");
}

}  // namespace

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    return f;
}

Graph read_graph(std::istream& in) {
    Lines l(in);
    auto [n, m] = header(l);
    Graph g(n);
    for (int k = 0; k < m; ++k) {
        auto [i, j] = pair_line(l, n);
        if (g.adjacent(i, j)) throw InvalidInput("line " + std::to_string(l.line()) + ": repeated edge");
        g.add_edge(i, j);
    }
    trailing(l);
    return g;
}

DigraphFile read_digraph(std::istream& in) {
    Lines l(in);
    auto [n, m] = header(l);
    DigraphFile f{n, {}};
    Digraph seen(n);
    for (int k = 0; k < m; ++k) {
        auto [i, j] = pair_line(l, n);
        if (seen.has_arc(i, j) || seen.has_arc(j, i))
            throw InvalidInput("line " + std::to_string(l.line()) + ": repeated arc");
        seen.add_arc(i, j);
        f.arcs.push_back({i, j});
    }
    trailing(l);
    return f;
}

Hypergraph read_hypergraph(std::istream& in) {
    Lines l(in);
    auto [n, m] = header(l);
    std::vector<std::vector<int>> edges;
    for (int k = 0; k < m; ++k) {
        const auto& t = l.next("a hyperedge `k v1 .. vk`");
        int size = to_int(t[0], l);
        if (size < 1 || static_cast<int>(t.size()) != size + 1)
            throw InvalidInput("line " + std::to_string(l.line()) + ": hyperedge size does not match");
        std::vector<int> e;
        for (int q = 1; q <= size; ++q) {
            int v = to_int(t[q], l);
            if (v < 1 || v > n) throw InvalidInput("line " + std::to_string(l.line()) + ": vertex out of range");
            e.push_back(v);
        }
        edges.push_back(std::move(e));
    }
    trailing(l);
    return Hypergraph(n, edges);
}

Graph read_graph_file(const std::string& path) {
    auto f = open_input(path);
    return read_graph(f);
}
DigraphFile read_digraph_file(const std::string& path) {
    auto f = open_input(path);
    return read_digraph(f);
}
Hypergraph read_hypergraph_file(const std::string& path) {
    auto f = open_input(path);
    return read_hypergraph(f);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_digraph(std::ostream& out, int n, const std::vector<Arc>& arcs) {
    out << n << ' ' << arcs.size() << '\n';
    for (auto a : arcs) out << a.from << ' ' << a.to << '\n';
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.n() << ' ' << h.edge_count() << '\n';
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& vs = h.edge(e);
        out << vs.size();
        for (int v : vs) out << ' ' << v;
        out << '\n';
    }
}

std::string hex_id(Mask m) {
    std::ostringstream s;
    s << std::hex << m;
    return s.str();
}

Mask parse_hex_id(const std::string& s) {
    std::size_t pos = 0;
    Mask m = 0;
    try {
        m = std::stoull(s, &pos, 16);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (s.empty() || pos != s.size()) throw InvalidInput("bad reorientation id: " + s);
    return m;
}

quotient::Congruence read_congruence(std::istream& in, const quotient::ARPoset& p) {
    Lines l(in);
    std::vector<int> label(p.size(), -1);
    int k = 0;
    while (!l.done()) {
        for (const auto& t : l.next("a class")) {
            int i = p.index_of(parse_hex_id(t));
            if (i < 0) throw InvalidInput("line " + std::to_string(l.line()) + ": " + t + " is not an acyclic reorientation");
            if (label[i] >= 0) throw InvalidInput("line " + std::to_string(l.line()) + ": " + t + " listed twice");
            label[i] = k;
        }
        ++k;
    }
    for (int i = 0; i < p.size(); ++i)
        if (label[i] < 0) throw InvalidInput("reorientation " + hex_id(p.elements[i]) + " is in no class");
    return quotient::make_congruence(label);
}

void write_congruence(std::ostream& out, const quotient::ARPoset& p, const quotient::Congruence& c) {
    for (const auto& cls : c.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << hex_id(p.elements[cls[i]]);
        out << '\n';
    }
}

std::vector<std::pair<int, int>> read_seed_pairs(std::istream& in, const quotient::ARPoset& p) {
    Lines l(in);
    std::vector<std::pair<int, int>> out;
    while (!l.done()) {
        const auto& t = l.next("a pair");
        if (t.size() != 2) throw InvalidInput("line " + std::to_string(l.line()) + ": expected two ids");
        int a = p.index_of(parse_hex_id(t[0])), b = p.index_of(parse_hex_id(t[1]));
        if (a < 0 || b < 0) throw InvalidInput("line " + std::to_string(l.line()) + ": not an acyclic reorientation");
        out.push_back({a, b});
    }
    return out;
}

}  // namespace orientgen::io
