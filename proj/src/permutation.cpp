#include "orientgen/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orientgen {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)), pos_(entries_.size() + 1, 0) {
    int n = size();
    for (int k = 0; k < n; ++k) {
        int v = entries_[k];
        if (v < 1 || v > n || pos_[v] != 0) throw InvalidInput("not a permutation of 1.." + std::to_string(n));
        pos_[v] = k + 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

void Permutation::jump_in_place(int value, Direction dir, int steps) {
    if (!jump_allowed(*this, value, dir, steps))
        throw InvalidInput("jump of " + std::to_string(value) + " by " + std::to_string(steps) +
                           " passes a larger value or leaves the permutation");
    int p = pos_[value];
    if (dir == Direction::right) {
        for (int k = p; k < p + steps; ++k) {
            entries_[k - 1] = entries_[k];
            pos_[entries_[k - 1]] = k;
        }
        entries_[p + steps - 1] = value;
        pos_[value] = p + steps;
    } else {
        for (int k = p; k > p - steps; --k) {
            entries_[k - 1] = entries_[k - 2];
            pos_[entries_[k - 1]] = k;
        }
        entries_[p - steps - 1] = value;
        pos_[value] = p - steps;
    }
}

std::string Permutation::to_string() const {
    std::string s;
    for (int k = 0; k < size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(entries_[k]);
    }
    return s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.entries()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
}

Permutation parse_permutation(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> e;
    std::string tok;
    while (in >> tok) {
        try {
            e.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InvalidInput("bad permutation entry '" + tok + "'");
        }
    }
    // Allow compact one-digit form like 2413.
    if (e.size() == 1 && text.find(' ') == std::string::npos && tok.size() > 1 && tok.size() <= 9) {
        e.clear();
        for (char c : tok) e.push_back(c - '0');
    }
    return Permutation(std::move(e));
}

Permutation insert_value(const Permutation& p, int position) {
    int n = p.size() + 1;
    if (position < 1 || position > n) throw InvalidInput("insert position out of range");
    std::vector<int> e(p.entries().begin(), p.entries().end());
    e.insert(e.begin() + (position - 1), n);
    return Permutation(std::move(e));
}

Permutation remove_largest(const Permutation& p) { return restrict_to(p, p.size() - 1); }

Permutation restrict_to(const Permutation& p, int k) {
    std::vector<int> e;
    e.reserve(std::max(k, 0));
    for (int v : p.entries())
        if (v <= k) e.push_back(v);
    return Permutation(std::move(e));
}

bool jump_allowed(const Permutation& p, int value, Direction dir, int steps) {
    if (value < 1 || value > p.size() || steps < 1) return false;
    int pos = p.position(value);
    int sign = dir == Direction::right ? 1 : -1;
    for (int k = 1; k <= steps; ++k) {
        int q = pos + sign * k;
        if (q < 1 || q > p.size() || p[q] > value) return false;
    }
    return true;
}

Permutation jump(const Permutation& p, int value, Direction dir, int steps) {
    Permutation out = p;
    out.jump_in_place(value, dir, steps);
    return out;
}

bool is_clean_jump(const Permutation& p, int value, Direction dir, int steps) {
    if (!jump_allowed(p, value, dir, steps)) return false;
    // Every larger k must flank the values below it; the jump stays inside that block.
    int n = p.size();
    int lo = 1, hi = n;
    for (int k = n; k > value; --k) {
        if (p[lo] == k)
            ++lo;
        else if (p[hi] == k)
            --hi;
        else
            return false;
    }
    return true;
}

int block_end(const Permutation& p, int value, Direction dir) {
    int q = p.position(value);
    int step = dir == Direction::left ? -1 : 1;
    while (q + step >= 1 && q + step <= p.size() && p[q + step] < value) q += step;
    return q;
}

bool is_peak_free(const Permutation& p) {
    int lo = 1, hi = p.size();
    for (int k = p.size(); k >= 1; --k) {
        if (p[lo] == k)
            ++lo;
        else if (p[hi] == k)
            --hi;
        else
            return false;
    }
    return true;
}

bool contains_pattern_231(const Permutation& p) {
    int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (p[k] < p[i] && p[i] < p[j]) return true;
    return false;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(e);
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace orientgen
