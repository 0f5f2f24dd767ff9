#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orientgen/graph.hpp"
#include "orientgen/permutation.hpp"

namespace orientgen::chordal {

// g must be in perfect elimination order, d acyclic.
Permutation encode(const Graph& g, const Digraph& d);
Digraph decode(const Graph& g, const Permutation& pi);

struct CostCounters {
    std::uint64_t visits = 0;
    std::uint64_t comparisons = 0;  // inside the neighbourhood sorts only
    std::uint64_t flips = 0;
    std::uint64_t matrix_writes = 0;

    double comparisons_per_visit() const { return visits ? double(comparisons) / double(visits) : 0.0; }
};

struct SswOptions {
    bool track_permutation = false;
};

// History-free Savage-Squire-West generator. The graph is relabelled by the given order; orientation(),
// last_flip() and permutation() use the new labels.
class SswGenerator {
   public:
    SswGenerator(const Graph& g, const PeoOrder& order, SswOptions opt = {});
    explicit SswGenerator(const Graph& g_in_peo, SswOptions opt = {});

    const Graph& graph() const { return g_; }
    const Relabeling& relabeling() const { return rel_; }
    const Digraph& orientation() const { return a_; }
    // Arc as it is oriented after the last step.
    const std::optional<Arc>& last_flip() const { return last_; }
    const Permutation& permutation() const;
    const CostCounters& counters() const { return cost_; }

    bool next();

   private:
    void init();
    void move_in_permutation(int j, Direction dir, int before);

    Graph g_;
    Relabeling rel_;
    Digraph a_;
    SswOptions opt_;
    // compressed chain over vertices with a nonempty earlier neighbourhood; index 0 terminates
    std::vector<int> level_;
    std::vector<std::vector<int>> t_list_;
    std::vector<int> t_;
    std::vector<Direction> o_;
    std::vector<int> s_;
    std::optional<Arc> last_;
    CostCounters cost_;
    Permutation pi_;
};

}  // namespace orientgen::chordal
