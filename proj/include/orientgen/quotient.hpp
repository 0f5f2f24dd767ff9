#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orientgen/graph.hpp"
#include "orientgen/jump.hpp"
#include "orientgen/permutation.hpp"

namespace orientgen::quotient {

enum class DigraphClass { not_acyclic, acyclic, vertebrate, peo_consistent, skeletal };
std::string_view to_string(DigraphClass c);

// Transitive reduction of every induced subdigraph is a forest. Exhaustive, n <= 20.
bool is_vertebrate(const Digraph& d);
bool is_filled(const Digraph& d);
bool is_skeletal(const Digraph& d);
// Terminal vertices peeled off one at a time, largest label first; the first
// one removed gets label n. Empty if d is not peo-consistent.
std::optional<PeoOrder> peo_consistent_order(const Digraph& d);
DigraphClass classify(const Digraph& d);

// Acyclic reorientations of the reference restricted to a vertex subset.
// Masks are over the full arc list; bit a set means arc a is reversed.
struct ARPoset {
    int n = 0;
    std::vector<Arc> arcs;
    Mask vertices = 0;     // bit v for active vertex v
    Mask active_arcs = 0;  // arcs with both ends active
    std::vector<Mask> elements;  // increasing
    std::vector<std::vector<int>> up, down;  // covers

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(Mask m) const;  // -1 if absent
    bool leq(int i, int j) const { return (elements[i] & ~elements[j]) == 0; }
    Digraph digraph(Mask flipped) const;  // on all n vertices, inactive arcs dropped
    Digraph reference() const { return digraph(0); }
    Mask arcs_at(int v) const;
};

ARPoset build_ar_poset(int n, std::span<const Arc> arcs, std::size_t cap = kDefaultCap);
ARPoset build_ar_poset(const Digraph& d, std::size_t cap = kDefaultCap);
// Same arc list, vertex set shrunk.
ARPoset sub_poset(const ARPoset& p, Mask vertices, std::size_t cap = kDefaultCap);

struct LatticeTables {
    bool is_lattice = false;
    std::optional<std::pair<int, int>> witness;  // a pair without unique join or meet
    std::vector<int> join, meet;                 // size*size, -1 where missing

    int join_of(int i, int j, int n) const { return join[static_cast<std::size_t>(i) * n + j]; }
    int meet_of(int i, int j, int n) const { return meet[static_cast<std::size_t>(i) * n + j]; }
};
LatticeTables lattice_tables(const ARPoset& p, Exec exec = Exec::serial);

struct Congruence {
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;  // element indices; ordered by smallest member

    int count() const { return static_cast<int>(classes.size()); }
    friend bool operator==(const Congruence&, const Congruence&) = default;
};
// Renumbers arbitrary labels into canonical form.
Congruence make_congruence(std::span<const int> labels);
Congruence identity_congruence(const ARPoset& p);
Congruence total_congruence(const ARPoset& p);

struct Check {
    bool ok = false;
    std::string failure;
    explicit operator bool() const { return ok; }
};

// Classes are intervals and joins/meets are respected. Rejects non-lattices.
Check validate_congruence(const ARPoset& p, const LatticeTables& t, const Congruence& c, Exec exec = Exec::serial);

// Smallest congruence identifying the seed pairs, by join/meet closure. Works on any lattice.
Congruence generated_congruence(const ARPoset& p, const LatticeTables& t, std::span<const std::pair<int, int>> seeds);

struct Polygon {
    std::vector<int> left, right;  // chains bottom to top, sharing endpoints
    bool hexagon() const { return left.size() == 4; }
};
// Intervals spanned by two upper covers of a common element.
std::vector<Polygon> polygons(const ARPoset& p, const LatticeTables& t);

// Diamond and hexagon rules plus interval closure. Skeletal references only.
Congruence forcing_closure(const ARPoset& p, const LatticeTables& t, std::span<const std::pair<int, int>> seeds);

// Weak-order rewriting b..ca ~ b..ac (a < b < c) on an acyclic tournament,
// values ranked along its topological order.
Congruence sylvester_congruence(const ARPoset& p);

// E ~* F iff c(E) ~ c(F) on the poset without vertex v.
std::pair<ARPoset, Congruence> restriction(const ARPoset& p, const Congruence& c, int v);

struct Rail {
    Mask base = 0;           // reorientation of the smaller digraph
    std::vector<int> chain;  // element indices from c(E) to cbar(E)
};
// Rails over the last vertex v, one per element of the restricted poset.
std::vector<Rail> rails(const ARPoset& p, int v);

struct LadderReport {
    bool ok = false;
    int ladders = 0;
    int hexagons = 0;
    std::string failure;
};
LadderReport check_ladders(const ARPoset& p, int v);
Check check_rail_intervals(const ARPoset& p, const Congruence& c, int v);
Check check_projection(const ARPoset& p, const Congruence& c, int v);

enum class RailRule { rd1, rd2 };

struct Representatives {
    PeoOrder order;          // peo-consistent labelling
    Relabeling relabeling;   // original <-> peo labels
    Graph graph;             // underlying graph in peo labels
    std::vector<Mask> reps;  // one per class, in class order
    std::vector<Permutation> perms;  // encodings of reps
    std::vector<RailRule> rules;     // rule used at level k (index k-1)
};

// Throws InvalidInput if the reference is not peo-consistent or the rail
// dichotomy fails (which means c is not a congruence).
Representatives select_representatives(const ARPoset& p, const Congruence& c);

struct QuotientVisit {
    Mask reorientation = 0;
    int class_id = 0;
    Permutation perm;
};

// Algorithm J over the representative encodings, from the identity.
class QuotientGenerator {
   public:
    QuotientGenerator(const ARPoset& p, const Congruence& c);

    const QuotientVisit& current() const { return cur_; }
    const Representatives& representatives() const { return reps_; }
    bool next();

   private:
    void load();

    const ARPoset* p_;
    const Congruence* c_;
    Representatives reps_;
    std::vector<Permutation> sorted_;
    std::vector<int> rep_of_sorted_;
    std::optional<JumpGenerator> gen_;
    QuotientVisit cur_;
};

std::vector<QuotientVisit> generate_quotient_path(const ARPoset& p, const Congruence& c);

}  // namespace orientgen::quotient
