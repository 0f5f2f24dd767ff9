#include "orientgen/hyper_ao.hpp"

#include <algorithm>

namespace orientgen::hyper {

namespace {

void require_heo(const Hypergraph& h) {
    if (!is_heo(h)) throw InvalidInput("hypergraph is not in hyperfect elimination order");
}

}  // namespace

Permutation encode(const Hypergraph& h, const HyperOrientation& o) {
    require_heo(h);
    if (!is_acyclic_orientation(h, o)) throw InvalidInput("orientation is not acyclic");
    std::vector<int> seq;
    for (int j = 1; j <= h.n(); ++j) {
        auto hj = restrict(h, j);
        auto p = poset_of(hj, restrict_orientation(h, o, j));
        bool maximal = p.cover_up[j] == 0;
        bool minimal = true;
        for (int k = 1; k < j; ++k)
            if (p.less(k, j)) minimal = false;
        if (maximal) {
            seq.push_back(j);
        } else if (minimal) {
            seq.insert(seq.begin(), j);
        } else {
            if (popcount(p.cover_up[j]) != 1) throw std::logic_error("vertex has several covers");
            int c = std::countr_zero(p.cover_up[j]);
            seq.insert(std::find(seq.begin(), seq.end(), c), j);
        }
    }
    return Permutation(std::move(seq));
}

HyperOrientation decode(const Hypergraph& h, const Permutation& pi) { return orientation_from_permutation(h, pi); }

HyperGenerator::HyperGenerator(const Hypergraph& h, std::span<const int> order, HyperGenOptions opt)
    : rel_(Relabeling::from_order(order)), opt_(opt) {
    if (static_cast<int>(order.size()) != h.n()) throw InvalidInput("order length differs from vertex count");
    h_ = relabel(h, rel_);
    init();
}

HyperGenerator::HyperGenerator(const Hypergraph& h_in_heo, HyperGenOptions opt)
    : h_(h_in_heo), rel_(Relabeling::identity(h_in_heo.n())), opt_(opt) {
    init();
}

void HyperGenerator::init() {
    require_heo(h_);
    int n = h_.n();
    o_ = max_orientation(h_);
    pi_ = Permutation::identity(n);
    own_.assign(n + 1, {});
    for (int e = 0; e < h_.edge_count(); ++e)
        if (h_.edge(e).size() >= 2) own_[h_.max_vertex(e)].push_back(e);
    level_.push_back(0);
    for (int j = 2; j <= n; ++j)
        if (!own_[j].empty()) level_.push_back(j);
    dir_.assign(level_.size(), Direction::left);
    s_.resize(level_.size());
    for (std::size_t k = 0; k < s_.size(); ++k) s_[k] = static_cast<int>(k);
}

int HyperGenerator::leftmost(Mask m) const {
    int best = 0;
    for (; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (best == 0 || pi_.position(v) < pi_.position(best)) best = v;
    }
    return best;
}

int HyperGenerator::rightmost(Mask m) const {
    int best = 0;
    for (; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (best == 0 || pi_.position(v) > pi_.position(best)) best = v;
    }
    return best;
}

Mask HyperGenerator::lower(int j) const {
    Mask m = 0;
    for (int e : own_[j])
        if (o_.heads[e] == j) m |= h_.mask(e);
    return m & ~bit(j);
}

Mask HyperGenerator::upper(int j) const {
    Mask m = 0;
    for (int e : own_[j])
        if (o_.heads[e] != j) m |= bit(o_.heads[e]);
    return m;
}

void HyperGenerator::apply_flip(int i, int j) {
    for (int e : h_.incident(i))
        if (o_.heads[e] == j) o_.heads[e] = i;
    last_ = PairFlip{i, j};
}

bool HyperGenerator::next() {
    int top = static_cast<int>(level_.size()) - 1;
    int k = s_[top];
    if (k == 0) {
        last_.reset();
        return false;
    }
    int j = level_[k];
    HyperOrientation before;
    if (opt_.debug_checks) before = o_;
    bool done;
    int p = pi_.position(j);
    if (dir_[k] == Direction::left) {
        int c = rightmost(lower(j));
        apply_flip(c, j);
        done = lower(j) == 0;
        int target = done ? block_end(pi_, j, Direction::left) : pi_.position(leftmost(upper(j)));
        pi_.jump_in_place(j, Direction::left, p - target);
    } else {
        int c = leftmost(upper(j));
        apply_flip(j, c);
        Mask up = upper(j);
        done = up == 0;
        int target = done ? block_end(pi_, j, Direction::right) : pi_.position(leftmost(up)) - 1;
        pi_.jump_in_place(j, Direction::right, target - p);
    }
    if (opt_.debug_checks) debug_check(before, *last_);
    s_[top] = top;
    if (done) {
        dir_[k] = opposite(dir_[k]);
        s_[k] = s_[k - 1];
        s_[k - 1] = k - 1;
    }
    return true;
}

void HyperGenerator::debug_check(const HyperOrientation& before, const PairFlip& f) const {
    auto pb = poset_of(h_, before);
    if (!(pb.cover_up[f.i] & bit(f.j))) throw std::logic_error("flipped pair was not a cover");
    if (pair_flip_raw(h_, before, f.i, f.j) != o_) throw std::logic_error("step is not the pair flip");
    if (!is_acyclic_orientation(h_, o_)) throw std::logic_error("orientation became cyclic");
    if (encode(h_, o_) != pi_) throw std::logic_error("tracked permutation differs from the encoding");
}

HyperGenerator ElimForestGenerator::make(const Graph& g, const PeoOrder& order, HyperGenOptions opt) {
    auto r = Relabeling::from_order(order.order);
    auto gp = relabel(g, r);
    if (!is_perfect_elimination_order(gp)) throw InvalidInput("graph is not chordal under the given order");
    auto bg = graphical_building_set(gp);
    return HyperGenerator(bg, opt);
}

ElimForestGenerator::ElimForestGenerator(const Graph& g, const PeoOrder& order, HyperGenOptions opt)
    : rel_(Relabeling::from_order(order.order)), gen_(make(g, order, opt)) {}

ElimForest ElimForestGenerator::forest() const {
    auto f = orientation_to_elim_forest(gen_.hypergraph(), gen_.orientation());
    ElimForest out{std::vector<int>(f.parent.size(), 0)};
    for (std::size_t v = 1; v < f.parent.size(); ++v)
        out.parent[rel_.old_of_new[v]] = f.parent[v] ? rel_.old_of_new[f.parent[v]] : 0;
    return out;
}

}  // namespace orientgen::hyper
