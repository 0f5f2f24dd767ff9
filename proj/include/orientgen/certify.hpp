#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "orientgen/graph.hpp"
#include "orientgen/hypergraph.hpp"
#include "orientgen/quotient.hpp"

namespace orientgen::certify {

struct Report {
    bool ok = true;
    std::string failure;
    std::size_t count = 0;  // objects listed
    std::size_t expected = 0;  // oracle count

    explicit operator bool() const { return ok; }
    Report& fail(std::string why) {
        if (ok) failure = std::move(why);
        ok = false;
        return *this;
    }
};

// Runs the generator and checks it against the brute-force oracles.
// Graph: oracle count, one flipped arc per step, flipped arc in the transitive reduction.
Report graph_listing(const Graph& g, const PeoOrder& order, std::size_t cap = kDefaultCap);
// Hypergraph: oracle count, each step a pair flip, encoding trace equals Algorithm J on the encodings.
Report hyper_listing(const Hypergraph& h, std::span<const int> heo, std::size_t cap = kDefaultCap);
// Elimination forests: Hamilton path in the brute-force rotation graph. n <= 8.
Report elim_listing(const Graph& g, const PeoOrder& order);
// Quotient: valid congruence and a Hamilton path in the brute-force quotient cover graph.
Report quotient_listing(const quotient::ARPoset& p, const quotient::Congruence& c);

}  // namespace orientgen::certify
