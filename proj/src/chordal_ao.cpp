#include "orientgen/chordal_ao.hpp"

#include <algorithm>

namespace orientgen::chordal {

namespace {

void require_peo(const Graph& g) {
    if (!is_perfect_elimination_order(g)) throw InvalidInput("graph is not in perfect elimination order");
}

std::vector<int> earlier_neighbors(const Graph& g, int j) {
    const auto& nb = g.neighbors(j);
    return {nb.begin(), std::lower_bound(nb.begin(), nb.end(), j)};
}

}  // namespace

Permutation encode(const Graph& g, const Digraph& d) {
    require_peo(g);
    if (d.n() != g.n()) throw InvalidInput("digraph and graph differ in vertex count");
    if (!is_acyclic(d)) throw InvalidInput("orientation has a directed cycle");
    std::vector<int> seq;
    seq.reserve(g.n());
    for (int j = 1; j <= g.n(); ++j) {
        std::vector<int> out;
        bool has_in = false;
        for (int i : earlier_neighbors(g, j)) {
            if (d.has_arc(j, i))
                out.push_back(i);
            else if (d.has_arc(i, j))
                has_in = true;
            else
                throw InvalidInput("digraph does not orient edge " + std::to_string(i) + " " + std::to_string(j));
        }
        if (out.empty()) {
            seq.push_back(j);
        } else if (!has_in) {
            seq.insert(seq.begin(), j);
        } else {
            // unique out-neighbour in the reduction: the source of the out-clique
            int u = out.front();
            for (int w : out)
                if (d.has_arc(w, u)) u = w;
            seq.insert(std::find(seq.begin(), seq.end(), u), j);
        }
    }
    return Permutation(std::move(seq));
}

Digraph decode(const Graph& g, const Permutation& pi) {
    if (pi.size() != g.n()) throw InvalidInput("permutation length differs from vertex count");
    Digraph d(g.n());
    for (auto e : g.edges()) {
        if (pi.position(e.u) < pi.position(e.v))
            d.add_arc(e.u, e.v);
        else
            d.add_arc(e.v, e.u);
    }
    return d;
}

SswGenerator::SswGenerator(const Graph& g, const PeoOrder& order, SswOptions opt)
    : rel_(Relabeling::from_order(order.order)), opt_(opt) {
    if (static_cast<int>(order.order.size()) != g.n()) throw InvalidInput("order length differs from vertex count");
    g_ = relabel(g, rel_);
    init();
}

SswGenerator::SswGenerator(const Graph& g_in_peo, SswOptions opt)
    : g_(g_in_peo), rel_(Relabeling::identity(g_in_peo.n())), opt_(opt) {
    init();
}

void SswGenerator::init() {
    require_peo(g_);
    int n = g_.n();
    a_ = Digraph(n);
    for (auto e : g_.edges()) a_.add_arc(e.u, e.v);  // every j a sink in D_j
    level_.push_back(0);
    t_list_.emplace_back();
    for (int j = 2; j <= n; ++j) {
        auto nb = earlier_neighbors(g_, j);
        if (nb.empty()) continue;
        level_.push_back(j);
        t_list_.push_back(std::move(nb));
    }
    std::size_t r = level_.size();
    t_.assign(r, 0);
    o_.assign(r, Direction::left);
    s_.resize(r);
    for (std::size_t k = 0; k < r; ++k) s_[k] = static_cast<int>(k);
    if (opt_.track_permutation) pi_ = Permutation::identity(n);
    cost_.visits = 1;
}

const Permutation& SswGenerator::permutation() const {
    if (!opt_.track_permutation) throw std::logic_error("permutation tracking is off");
    return pi_;
}

void SswGenerator::move_in_permutation(int j, Direction dir, int before) {
    // before == 0: to the end of j's block in direction dir
    int p = pi_.position(j);
    int target;
    if (before == 0) {
        target = block_end(pi_, j, dir);
    } else {
        int q = pi_.position(before);
        target = dir == Direction::left ? q : q - 1;
    }
    int d = dir == Direction::left ? p - target : target - p;
    if (d > 0) pi_.jump_in_place(j, dir, d);
}

bool SswGenerator::next() {
    int top = static_cast<int>(level_.size()) - 1;
    int k = s_[top];  // A3
    if (k == 0) {
        last_.reset();
        return false;
    }
    int j = level_[k];
    auto& T = t_list_[k];
    int deg = static_cast<int>(T.size());
    if (t_[k] == 0) {  // A4
        std::uint64_t cmp = 0;
        std::sort(T.begin(), T.end(), [&](int x, int y) {
            ++cmp;
            return a_.has_arc(x, y);
        });
        cost_.comparisons += cmp;
    }
    int t = ++t_[k];  // A5
    if (o_[k] == Direction::left) {
        int i = T[deg - t];
        a_.reverse_arc(i, j);
        last_ = Arc{j, i};
        if (opt_.track_permutation) move_in_permutation(j, Direction::left, t == deg ? 0 : i);
    } else {
        int i = T[t - 1];
        a_.reverse_arc(j, i);
        last_ = Arc{i, j};
        if (opt_.track_permutation) move_in_permutation(j, Direction::right, t == deg ? 0 : T[t]);
    }
    cost_.matrix_writes += 2;
    ++cost_.flips;
    ++cost_.visits;
    s_[top] = top;  // A6
    if (t == deg) {
        o_[k] = opposite(o_[k]);
        t_[k] = 0;
        s_[k] = s_[k - 1];
        s_[k - 1] = k - 1;
    }
    return true;
}

}  // namespace orientgen::chordal
