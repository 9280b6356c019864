#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sdrlink/types.hpp"

namespace sdrlink {

enum class Scheme { Bpsk, Qpsk, Qam16, Qam64 };

int scheme_order(Scheme s);          // number of constellation points
int bits_per_symbol(Scheme s);       // log2(order)
std::string_view scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

// All schemes in ascending bits-per-symbol order.
std::span<const Scheme> all_schemes();

// Memoryless symbol mapper with hard-decision slicing.
//
// Points are indexed by label. Labels are Gray-coded per quadrature axis
// (high half of the label drives I, low half drives Q), so any two
// nearest-neighbour points differ in exactly one bit. BPSK is pinned to
// label 0 -> +1 (phase 0) and label 1 -> -1 (phase 180). Average symbol
// energy is exactly 1 for every scheme.
class Constellation {
public:
    explicit Constellation(Scheme scheme);

    Scheme scheme() const { return scheme_; }
    int order() const { return static_cast<int>(points_.size()); }
    int bits_per_symbol() const { return bits_; }
    const std::vector<Complex>& points() const { return points_; }
    Complex point(std::uint32_t label) const { return points_[label]; }

    // bits.size() must be a multiple of bits_per_symbol(); bits are consumed
    // MSB-first per symbol. Any nonzero bit value counts as 1.
    IqSamples map_bits(std::span<const std::uint8_t> bits) const;

    // Nearest-point decisions, bits(label) MSB-first per symbol. Exact ties
    // resolve to the smaller Gray code on the tied axis. Rejects NaN/Inf.
    BitStream demap_hard(std::span<const Complex> samples) const;

    std::uint32_t nearest_label(Complex sample) const;

private:
    std::uint32_t slice_axis(double coord) const;

    Scheme scheme_;
    int bits_ = 0;       // bits per symbol
    int axis_bits_ = 0;  // bits per quadrature axis
    int axes_ = 0;       // 1 for BPSK, 2 otherwise
    int levels_ = 0;     // amplitude levels per axis
    double scale_ = 1.0; // level spacing is 2 * scale_
    std::vector<std::uint32_t> code_of_level_; // level index -> axis Gray code
    std::vector<std::uint32_t> level_of_code_; // axis Gray code -> level index
    std::vector<Complex> points_;              // indexed by label
};

Constellation build_constellation(Scheme scheme);

} // namespace sdrlink
