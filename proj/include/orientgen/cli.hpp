#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "orientgen/graph.hpp"
#include "orientgen/hypergraph.hpp"
#include "orientgen/io.hpp"

namespace orientgen::cli {

class CertificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct AoGraphConfig {
    std::string peo = "auto";  // auto | given
    std::string output = "arcs";  // arcs | perm | flips | dot
    bool count_only = false;
    bool counters = false;
    bool certify = false;
    std::size_t cap = kDefaultCap;
};

struct AoHyperConfig {
    std::string order = "auto";  // auto | given
    std::string output = "heads";  // heads | perm | flips | dot
    bool count_only = false;
    bool certify = false;
    std::size_t cap = kDefaultCap;
};

struct ElimConfig {
    std::string output = "forest";  // forest | perm
    bool count_only = false;
    bool certify = false;
};

struct QuotientConfig {
    std::string source = "identity";  // identity | sylvester | congruence | seeds
    std::string file;
    std::string output = "classes";  // classes | perm | dot
    bool certify = false;
    std::size_t cap = kDefaultCap;
};

// Each returns the number of objects listed. Errors are thrown.
std::size_t ao_graph(const Graph& g, const AoGraphConfig& cfg, std::ostream& out, std::ostream& err);
std::size_t ao_hyper(const Hypergraph& h, const AoHyperConfig& cfg, std::ostream& out, std::ostream& err);
std::size_t elim_trees(const Graph& g, const ElimConfig& cfg, std::ostream& out, std::ostream& err);
std::size_t quotient(const io::DigraphFile& d, const QuotientConfig& cfg, std::ostream& out, std::ostream& err);

// Exit codes: 0 ok, 1 invalid input or failed certification, 2 cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orientgen::cli
