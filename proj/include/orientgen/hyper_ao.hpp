#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orientgen/hypergraph.hpp"

namespace orientgen::hyper {

// h must be in hyperfect elimination order, o acyclic.
Permutation encode(const Hypergraph& h, const HyperOrientation& o);
HyperOrientation decode(const Hypergraph& h, const Permutation& pi);

struct HyperGenOptions {
    // Recompute poset and encoding after every step and compare.
    bool debug_checks = false;
};

struct PairFlip {
    int i = 0;  // new head
    int j = 0;  // old head
};

// Pair-flip Gray code driven by clean jumps of the encoding permutation.
class HyperGenerator {
   public:
    HyperGenerator(const Hypergraph& h, std::span<const int> order, HyperGenOptions opt = {});
    explicit HyperGenerator(const Hypergraph& h_in_heo, HyperGenOptions opt = {});

    const Hypergraph& hypergraph() const { return h_; }
    const Relabeling& relabeling() const { return rel_; }
    const HyperOrientation& orientation() const { return o_; }
    const Permutation& permutation() const { return pi_; }
    const std::optional<PairFlip>& last_flip() const { return last_; }

    bool next();

   private:
    void init();
    void apply_flip(int i, int j);
    // vertex of mask with extreme position in pi
    int leftmost(Mask m) const;
    int rightmost(Mask m) const;
    Mask lower(int j) const;  // vertices below j in its own hyperedges
    Mask upper(int j) const;  // other heads of j's own hyperedges
    void debug_check(const HyperOrientation& before, const PairFlip& f) const;

    Hypergraph h_;
    Relabeling rel_;
    HyperGenOptions opt_;
    HyperOrientation o_;
    Permutation pi_;
    std::vector<std::vector<int>> own_;  // hyperedges with max j and size >= 2
    std::vector<int> level_;
    std::vector<Direction> dir_;
    std::vector<int> s_;
    std::optional<PairFlip> last_;
};

// Elimination forests of a chordal graph via its graphical building set.
class ElimForestGenerator {
   public:
    ElimForestGenerator(const Graph& g, const PeoOrder& order, HyperGenOptions opt = {});

    // Forest on the original labels.
    ElimForest forest() const;
    const HyperGenerator& generator() const { return gen_; }
    bool next() { return gen_.next(); }

   private:
    static HyperGenerator make(const Graph& g, const PeoOrder& order, HyperGenOptions opt);
    Relabeling rel_;
    HyperGenerator gen_;
};

}  // namespace orientgen::hyper
