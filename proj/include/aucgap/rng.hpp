#pragma once

#include <cstddef>
#include <cstdint>

namespace aucgap::rng {

// Counter-based uniform stream built on the splitmix64 finalizer
// (Steele, Lea & Flood 2014). Every draw is a pure function of
// (seed, path of indices, counter), so generation order, threading and
// chunking cannot change the output, and the exact sequence can be
// reproduced from this definition alone in any language.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Substream / draw derivation: derive(key, i) is the i-th child of key.
// Nest calls to build a path, e.g. derive(derive(seed, resample), group).
constexpr std::uint64_t derive(std::uint64_t key, std::uint64_t index) {
    return mix64(key + (index + 1) * kGolden);
}

// Map 64 random bits to the open interval (0,1); never returns 0 or 1,
// so inverse-CDF transforms stay finite. Uses the top 52 bits: every
// (k + 0.5) * 2^-52 is exactly representable, so no rounding can push the
// result onto an endpoint (53-bit variants round their top value up to 1).
inline double unit_open(std::uint64_t bits) {
    return (static_cast<double>(bits >> 12) + 0.5) * 0x1p-52;
}

// Map 64 random bits to an index in [0, n). n must be positive.
inline std::size_t bounded(std::uint64_t bits, std::size_t n) {
    return static_cast<std::size_t>(unit_open(bits) * static_cast<double>(n));
}

} // namespace aucgap::rng
