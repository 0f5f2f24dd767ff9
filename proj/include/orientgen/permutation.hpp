#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orientgen/common.hpp"

namespace orientgen {

// Sequence over [n] with its inverse. Positions are 1-based.
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int pos) const { return entries_[pos - 1]; }
    int position(int value) const { return pos_[value]; }
    std::span<const int> entries() const { return entries_; }

    // Rotate value v by d steps past smaller neighbours. Precondition checked.
    void jump_in_place(int value, Direction dir, int steps);

    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.entries_ == b.entries_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.entries_ <=> b.entries_; }

   private:
    std::vector<int> entries_;
    std::vector<int> pos_ = std::vector<int>(1, 0);
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

Permutation parse_permutation(const std::string& text);

// c_i: insert n = size+1 at position i.
Permutation insert_value(const Permutation& p, int position);
// p: drop the largest value.
Permutation remove_largest(const Permutation& p);
// Project to values <= k.
Permutation restrict_to(const Permutation& p, int k);

bool jump_allowed(const Permutation& p, int value, Direction dir, int steps);
Permutation jump(const Permutation& p, int value, Direction dir, int steps);
bool is_clean_jump(const Permutation& p, int value, Direction dir, int steps);
bool is_peak_free(const Permutation& p);
// Last position reachable by value moving in dir past smaller values only.
int block_end(const Permutation& p, int value, Direction dir);
bool contains_pattern_231(const Permutation& p);

std::vector<Permutation> all_permutations(int n);

}  // namespace orientgen
