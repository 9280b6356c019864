#pragma once

#include <cstdint>

#include "sdrlink/constellation.hpp"

namespace sdrlink {

struct BerMeasurement {
    std::uint64_t bits_sent = 0;
    std::uint64_t bit_errors = 0;

    double ber() const {
        return bits_sent ? static_cast<double>(bit_errors) / static_cast<double>(bits_sent) : 0.0;
    }
};

// Monte-Carlo BER of one (scheme, Es/N0) point: random bits -> map ->
// AWGN -> hard demap -> count errors. n_bits is rounded down to a whole
// number of symbols. (seed, point_tag) select independent bit/noise
// substreams; results are identical for any `threads` value.
BerMeasurement measure_ber(const Constellation& c, double es_n0_db, std::uint64_t n_bits,
                           std::uint64_t seed, std::uint64_t point_tag, unsigned threads = 1);

} // namespace sdrlink
