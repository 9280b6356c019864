#pragma once

#include <cstdint>
#include <vector>

#include "sdrlink/amc.hpp"
#include "sdrlink/channel.hpp"
#include "sdrlink/constellation.hpp"

namespace sdrlink {

// One simulated link operating point.
struct LinkReport {
    Scheme scheme = Scheme::Bpsk;
    double snr_db = 0.0;  // Es/N0 at the receiver
    double ebn0_db = 0.0; // snr_db normalized per information bit
    std::uint64_t bits_sent = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    double goodput_bps = 0.0; // throughput scaled by (1 - ber)
    bool reliable = false;    // enough errors observed to trust the estimate
};

// Fixed-scheme BER sweep over Eb/N0 points.
struct SweepSpec {
    Scheme scheme = Scheme::Bpsk;
    std::vector<double> ebn0_db_points;
    std::uint64_t bits_per_point = 1'200'000; // >= 10^4, multiple of bits/symbol
    std::uint64_t seed = 1;
    double symbol_rate_hz = 1e6;
    unsigned threads = 1;

    void validate() const; // throws ConfigError
};

std::vector<LinkReport> run_ber_sweep(const SweepSpec& spec);

// Adaptive-modulation walk over receiver distances (nearest first). Scheme
// selection is stateful across points, so hysteresis behaves as it would on
// a link whose SNR drifts from high to low.
struct RangeSimSpec {
    std::vector<double> distances_m; // positive, strictly increasing
    PathLossModel path_loss;
    AmcPolicy policy;
    std::uint64_t bits_per_point = 240'000;
    std::uint64_t seed = 1;
    double symbol_rate_hz = 1e6;
    unsigned threads = 1;

    void validate() const; // throws ConfigError
};

std::vector<LinkReport> run_range_sim(const RangeSimSpec& spec);

// Evenly log-spaced distances from dmin to dmax inclusive.
std::vector<double> log_spaced_distances(double dmin_m, double dmax_m, int points);

} // namespace sdrlink
