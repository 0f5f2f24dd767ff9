#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "orientgen/graph.hpp"
#include "orientgen/hypergraph.hpp"
#include "orientgen/quotient.hpp"

namespace orientgen::io {

// Arc order as listed; reorientation ids refer to it.
struct DigraphFile {
    int n = 0;
    std::vector<Arc> arcs;
    Digraph digraph() const { return Digraph(n, arcs); }
};

Graph read_graph(std::istream& in);
DigraphFile read_digraph(std::istream& in);
Hypergraph read_hypergraph(std::istream& in);
Graph read_graph_file(const std::string& path);
DigraphFile read_digraph_file(const std::string& path);
Hypergraph read_hypergraph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_digraph(std::ostream& out, int n, const std::vector<Arc>& arcs);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

std::string hex_id(Mask m);
Mask parse_hex_id(const std::string& s);

// One class per line, hex reorientation ids. Every element exactly once.
quotient::Congruence read_congruence(std::istream& in, const quotient::ARPoset& p);
void write_congruence(std::ostream& out, const quotient::ARPoset& p, const quotient::Congruence& c);
// Pairs of hex ids, one pair per line.
std::vector<std::pair<int, int>> read_seed_pairs(std::istream& in, const quotient::ARPoset& p);
std::ifstream open_input(const std::string& path);

}  // namespace orientgen::io
