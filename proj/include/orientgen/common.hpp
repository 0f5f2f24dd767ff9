#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orientgen {

// Bad input: non-chordal graph, bad order, malformed file, invalid congruence.
class InvalidInput : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// An enumeration would grow past the configured cap.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCap = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultHyperedgeCap = 1000000;

// ORIENTGEN_CAP if set and parseable, else fallback.
std::size_t cap_from_env(std::size_t fallback = kDefaultCap);

using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }

enum class Direction { left, right };

inline Direction opposite(Direction d) { return d == Direction::left ? Direction::right : Direction::left; }

// Execution policy for oracle kernels that have an OpenMP version.
enum class Exec { serial, parallel };

}  // namespace orientgen
