#include "orientgen/jump.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <unordered_set>

namespace orientgen {

LanguageOracle LanguageOracle::from_set(int n, std::span<const Permutation> members) {
    auto set = std::make_shared<std::unordered_set<Permutation, PermutationHash>>(members.begin(), members.end());
    return {n, [set](const Permutation& p) { return set->count(p) > 0; }};
}

JumpGenerator::JumpGenerator(LanguageOracle oracle, std::optional<Permutation> start, bool check_clean)
    : oracle_(std::move(oracle)), pi_(start ? *start : Permutation::identity(oracle_.n)), check_clean_(check_clean) {
    int n = oracle_.n;
    if (pi_.size() != n) throw InvalidInput("start permutation has wrong length");
    if (!is_peak_free(pi_)) throw InvalidInput("start permutation has a peak");
    if (!oracle_.contains(pi_)) throw InvalidInput("start permutation is not in the language");
    // Each value heads away from the end of its block it starts at.
    std::vector<Direction> dir(n + 1, Direction::left);
    int lo = 1, hi = n;
    for (int k = n; k >= 1; --k) {
        if (pi_[hi] == k) {
            --hi;
        } else {
            dir[k] = Direction::right;
            ++lo;
        }
    }
    level_.push_back(0);
    o_.push_back(Direction::left);
    for (int j = 2; j <= n; ++j) {
        if (!minimal_jump(j, dir[j])) continue;  // value never moves
        level_.push_back(j);
        o_.push_back(dir[j]);
    }
    s_.resize(level_.size());
    for (std::size_t k = 0; k < s_.size(); ++k) s_[k] = static_cast<int>(k);
}

std::optional<int> JumpGenerator::minimal_jump(int value, Direction dir) const {
    int pos = pi_.position(value);
    int sign = dir == Direction::right ? 1 : -1;
    Permutation trial = pi_;
    for (int d = 1;; ++d) {
        int q = pos + sign * d;
        if (q < 1 || q > pi_.size() || pi_[q] > value) return std::nullopt;
        trial.jump_in_place(value, dir, 1);
        if (oracle_.contains(trial)) return d;
    }
}

bool JumpGenerator::at_extreme(int value, Direction dir) const {
    int q = pi_.position(value) + (dir == Direction::right ? 1 : -1);
    return q < 1 || q > pi_.size() || pi_[q] > value;
}

bool JumpGenerator::next() {
    int top = static_cast<int>(level_.size()) - 1;
    int k = s_[top];
    if (k == 0) {
        last_.reset();
        return false;
    }
    int j = level_[k];
    auto d = minimal_jump(j, o_[k]);
    if (!d) throw std::logic_error("no minimal jump for value " + std::to_string(j) + "; language is not zigzag");
    if (check_clean_ && !is_clean_jump(pi_, j, o_[k], *d))
        throw std::logic_error("unclean jump of " + std::to_string(j));
    pi_.jump_in_place(j, o_[k], *d);
    last_ = JumpStep{j, o_[k], *d};
    s_[top] = top;
    if (at_extreme(j, o_[k])) {
        o_[k] = opposite(o_[k]);
        s_[k] = s_[k - 1];
        s_[k - 1] = k - 1;
    }
    return true;
}

std::vector<Permutation> algorithm_j(const LanguageOracle& oracle, std::optional<Permutation> start,
                                     std::size_t cap) {
    JumpGenerator gen(oracle, std::move(start), true);
    std::vector<Permutation> out{gen.current()};
    while (gen.next()) {
        if (out.size() >= cap) throw CapExceeded("Algorithm J listing exceeds cap of " + std::to_string(cap));
        out.push_back(gen.current());
    }
    return out;
}

std::vector<Permutation> greedy_j(const LanguageOracle& oracle, std::optional<Permutation> start, std::size_t cap) {
    int n = oracle.n;
    Permutation pi = start ? *start : Permutation::identity(n);
    if (!oracle.contains(pi)) throw InvalidInput("start permutation is not in the language");
    std::unordered_set<Permutation, PermutationHash> seen{pi};
    std::vector<Permutation> out{pi};
    auto minimal = [&](int v, Direction dir) -> std::optional<Permutation> {
        Permutation t = pi;
        for (int d = 1; jump_allowed(pi, v, dir, d); ++d) {
            t.jump_in_place(v, dir, 1);
            if (oracle.contains(t)) return t;
        }
        return std::nullopt;
    };
    for (;;) {
        std::optional<Permutation> chosen;
        bool stop = false;
        for (int v = n; v >= 1 && !chosen && !stop; --v) {
            auto l = minimal(v, Direction::left);
            auto r = minimal(v, Direction::right);
            bool lu = l && !seen.count(*l);
            bool ru = r && !seen.count(*r);
            if (lu && ru)
                stop = true;
            else if (lu)
                chosen = l;
            else if (ru)
                chosen = r;
        }
        if (!chosen) break;
        if (out.size() >= cap) throw CapExceeded("greedy listing exceeds cap of " + std::to_string(cap));
        pi = *chosen;
        seen.insert(pi);
        out.push_back(pi);
    }
    return out;
}

namespace {

// (z1) or (z2) for one level given the projected level below.
enum class Zigzag { z1, z2, none };

Zigzag level_kind(const std::set<Permutation>& level, const std::set<Permutation>& below, int n) {
    bool z1 = true;
    for (const auto& p : below)
        if (!level.count(insert_value(p, 1)) || !level.count(insert_value(p, n))) {
            z1 = false;
            break;
        }
    if (z1) return Zigzag::z1;
    if (level.size() != below.size()) return Zigzag::none;
    for (const auto& p : below)
        if (!level.count(insert_value(p, n))) return Zigzag::none;
    return Zigzag::z2;
}

std::vector<std::set<Permutation>> projection_chain(std::span<const Permutation> language) {
    int n = language.empty() ? 0 : language.front().size();
    std::vector<std::set<Permutation>> chain(n + 1);
    chain[n] = std::set<Permutation>(language.begin(), language.end());
    for (int k = n; k >= 1; --k)
        for (const auto& p : chain[k]) chain[k - 1].insert(remove_largest(p));
    return chain;
}

}  // namespace

bool is_zigzag_language(std::span<const Permutation> language) {
    if (language.empty()) return false;
    int n = language.front().size();
    for (const auto& p : language)
        if (p.size() != n) return false;
    auto chain = projection_chain(language);
    for (int k = 1; k <= n; ++k)
        if (level_kind(chain[k], chain[k - 1], k) == Zigzag::none) return false;
    return true;
}

std::vector<Permutation> inductive_j(std::span<const Permutation> language) {
    if (language.empty()) throw InvalidInput("empty language");
    int n = language.front().size();
    auto chain = projection_chain(language);
    std::vector<Permutation> seq{Permutation()};
    for (int k = 1; k <= n; ++k) {
        auto kind = level_kind(chain[k], chain[k - 1], k);
        if (kind == Zigzag::none)
            throw InvalidInput("language violates the zigzag conditions at length " + std::to_string(k));
        std::vector<Permutation> next;
        for (std::size_t t = 0; t < seq.size(); ++t) {
            if (kind == Zigzag::z2) {
                next.push_back(insert_value(seq[t], k));
                continue;
            }
            bool backward = t % 2 == 0;
            for (int step = 1; step <= k; ++step) {
                int i = backward ? k + 1 - step : step;
                auto c = insert_value(seq[t], i);
                if (chain[k].count(c)) next.push_back(std::move(c));
            }
        }
        seq = std::move(next);
    }
    return seq;
}

}  // namespace orientgen
