#pragma once

#include <cstdint>
#include <span>

#include "sdrlink/types.hpp"

namespace sdrlink {

// Complex AWGN at a fixed symbol-energy-to-noise ratio. Noise is drawn from
// a counter-based stream keyed by `seed`, so equal seeds give bit-identical
// noise regardless of how a burst is chunked.
struct ChannelConfig {
    double es_n0_db = 10.0;
    std::uint64_t seed = 0;
};

// Adds circularly symmetric Gaussian noise with per-dimension variance
// 0.5 * 10^(-es_n0_db/10) (unit average symbol energy assumed).
// first_symbol_index addresses the noise stream when processing a burst in
// chunks: chunk k starting at absolute symbol j must pass j.
IqSamples apply_awgn(std::span<const Complex> symbols, const ChannelConfig& cfg,
                     std::uint64_t first_symbol_index = 0);

// Log-distance path loss: SNR(d) = snr0_db - 10 * exponent * log10(d / d0_m).
struct PathLossModel {
    double snr0_db = 26.0; // SNR at the reference distance
    double d0_m = 1.0;     // reference distance
    double exponent = 2.0; // path-loss exponent

    void validate() const; // throws ConfigError
};

double snr_from_distance(double distance_m, const PathLossModel& model); // dB

// Measured SNR in dB from a received burst and its known transmitted
// reference: mean|tx|^2 over mean|rx - tx|^2. Needs at least 100 symbols;
// result saturates at +100 dB.
double estimate_snr(std::span<const Complex> received, std::span<const Complex> reference);

} // namespace sdrlink
