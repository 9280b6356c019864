#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>

namespace sdrlink::rng {

// Counter-based generator: every draw is a pure function of (key, counter),
// so chunked and whole-burst processing see identical streams and parallel
// workers never contend for generator state.

constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Stream {
    std::uint64_t key = 0;
};

// Well-separated substreams of one user seed. `tag` names the role
// (payload bits, channel noise, ...), `lane` the instance within the role.
constexpr Stream make_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t lane = 0) {
    std::uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ULL);
    h = mix64(h ^ tag);
    h = mix64(h ^ lane);
    return Stream{h};
}

constexpr std::uint64_t word_at(Stream s, std::uint64_t index) {
    return mix64(s.key ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
}

// Uniform on (0, 1]; never returns 0, so log() stays finite.
inline double uniform01(std::uint64_t word) {
    return static_cast<double>((word >> 11) + 1) * 0x1.0p-53;
}

// Two independent standard normals from counter `index` (Box-Muller).
inline std::pair<double, double> normal_pair(Stream s, std::uint64_t index) {
    const double u1 = uniform01(word_at(s, 2 * index));
    const double u2 = uniform01(word_at(s, 2 * index + 1));
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(th), r * std::sin(th)};
}

// out[i] = bit number (first_bit_index + i) of the stream. Bit j lives in
// word j/64, so any chunking of a burst reproduces the same bits.
inline void fill_bits(Stream s, std::uint64_t first_bit_index, std::span<std::uint8_t> out) {
    std::uint64_t word = 0;
    std::uint64_t have_word = ~std::uint64_t{0};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::uint64_t bit = first_bit_index + i;
        if (bit / 64 != have_word) {
            have_word = bit / 64;
            word = word_at(s, have_word);
        }
        out[i] = static_cast<std::uint8_t>((word >> (bit % 64)) & 1u);
    }
}

// Role tags for substream derivation.
inline constexpr std::uint64_t kTagPayloadBits = 0x0042495453ULL;
inline constexpr std::uint64_t kTagChannelNoise = 0x004157474eULL;
inline constexpr std::uint64_t kTagPointSeed = 0x504f494e54ULL;

} // namespace sdrlink::rng
