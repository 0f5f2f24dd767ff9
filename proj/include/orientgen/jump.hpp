#pragma once

#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "orientgen/permutation.hpp"

namespace orientgen {

struct LanguageOracle {
    int n = 0;
    std::function<bool(const Permutation&)> contains;

    static LanguageOracle from_set(int n, std::span<const Permutation> members);
};

struct JumpStep {
    int value = 0;
    Direction dir = Direction::left;
    int steps = 0;
};

// History-free Algorithm J: per-value directions o and selector chain s,
// minimal jumps found by scanning step counts against the oracle.
class JumpGenerator {
   public:
    explicit JumpGenerator(LanguageOracle oracle, std::optional<Permutation> start = std::nullopt,
                           bool check_clean = false);

    const Permutation& current() const { return pi_; }
    const std::optional<JumpStep>& last_step() const { return last_; }
    bool next();

   private:
    std::optional<int> minimal_jump(int value, Direction dir) const;
    bool at_extreme(int value, Direction dir) const;

    LanguageOracle oracle_;
    Permutation pi_;
    // Levels whose value ever moves; index 0 is the terminating sentinel.
    std::vector<int> level_;
    std::vector<Direction> o_;
    std::vector<int> s_;
    std::optional<JumpStep> last_;
    bool check_clean_ = false;
};

// Full listing via JumpGenerator; throws CapExceeded past cap.
std::vector<Permutation> algorithm_j(const LanguageOracle& oracle, std::optional<Permutation> start = std::nullopt,
                                     std::size_t cap = kDefaultCap);

// The literal greedy rule with a visited set: largest value, minimal jump,
// stop when nothing is unvisited or the direction is ambiguous.
std::vector<Permutation> greedy_j(const LanguageOracle& oracle, std::optional<Permutation> start = std::nullopt,
                                  std::size_t cap = kDefaultCap);

// Builds J(L_n) from J(L_{n-1}) by the alternating insertion rule. The chain
// L_{n-1}, ..., L_0 is obtained by projection.
std::vector<Permutation> inductive_j(std::span<const Permutation> language);

bool is_zigzag_language(std::span<const Permutation> language);

}  // namespace orientgen
