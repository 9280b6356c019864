#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdrlink/constellation.hpp"

namespace sdrlink {

struct AmcEntry {
    Scheme scheme;
    double min_snr_db; // least Es/N0 at which the scheme meets the target BER
};

// Switching policy: entries ascend in bits per symbol, one entry per scheme,
// and the lowest-order entry (BPSK) is always present so the link never
// disconnects. Thresholds must increase with order, except that entries may
// tie at the lowest threshold when the target is loose enough for every
// scheme at the bottom of the measured range.
struct AmcPolicy {
    std::vector<AmcEntry> entries;
    double target_ber = 1e-3;
    double hysteresis_db = 0.0;

    void validate() const; // throws ConfigError
    const AmcEntry* entry_for(Scheme s) const;
};

// Sticky selection state carried across calls.
struct LinkState {
    Scheme current_scheme = Scheme::Bpsk;
    double last_snr_db = 0.0;
};

// Es/N0 search grid for threshold derivation.
struct ThresholdGrid {
    double min_es_n0_db = -2.0;
    double max_es_n0_db = 30.0;
    double step_db = 0.25;
};

// Monte-Carlo threshold derivation: for each scheme, the smallest grid SNR
// whose measured BER meets target_ber. sim_budget_bits is spent per
// measured point and must be at least 100/target_ber (throws
// InsufficientBudgetError otherwise). Deterministic in (seed, grid, budget).
AmcPolicy derive_thresholds(double target_ber, std::span<const Scheme> schemes,
                            std::uint64_t sim_budget_bits, std::uint64_t seed,
                            const ThresholdGrid& grid = {}, unsigned threads = 1);

// Highest-order scheme whose threshold is at or below snr_db, BPSK if none.
// Upgrades additionally require snr_db >= threshold + hysteresis_db;
// downgrades apply immediately. Updates state.
Scheme select_scheme(double snr_db, const AmcPolicy& policy, LinkState& state);

// Raw modulated throughput in bits/s at a given symbol rate.
double throughput_bits_per_sec(Scheme s, double symbol_rate_hz);

} // namespace sdrlink
