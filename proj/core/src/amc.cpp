#include "sdrlink/amc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sdrlink/errors.hpp"
#include "sdrlink/montecarlo.hpp"

namespace sdrlink {

void AmcPolicy::validate() const {
    if (entries.empty()) throw ConfigError("policy has no entries");
    if (entries.front().scheme != Scheme::Bpsk) {
        throw ConfigError("policy must start with a bpsk entry");
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!std::isfinite(entries[i].min_snr_db)) {
            throw ConfigError("policy threshold must be finite");
        }
        if (i == 0) continue;
        if (bits_per_symbol(entries[i].scheme) <= bits_per_symbol(entries[i - 1].scheme)) {
            throw ConfigError("policy entries must ascend in bits per symbol");
        }
        const double prev = entries[i - 1].min_snr_db;
        const double cur = entries[i].min_snr_db;
        // Ties are legal only when the tied entries sit at the policy's
        // lowest threshold (a target loose enough for every scheme there).
        if (cur < prev || (cur == prev && prev != entries.front().min_snr_db)) {
            throw ConfigError("policy thresholds must increase with bits per symbol");
        }
    }
    if (!(target_ber > 0.0) || !(target_ber < 0.5)) {
        throw ConfigError("target_ber must lie in (0, 0.5)");
    }
    if (!(hysteresis_db >= 0.0) || !std::isfinite(hysteresis_db)) {
        throw ConfigError("hysteresis_db must be non-negative");
    }
}

const AmcEntry* AmcPolicy::entry_for(Scheme s) const {
    for (const auto& e : entries) {
        if (e.scheme == s) return &e;
    }
    return nullptr;
}

AmcPolicy derive_thresholds(double target_ber, std::span<const Scheme> schemes,
                            std::uint64_t sim_budget_bits, std::uint64_t seed,
                            const ThresholdGrid& grid, unsigned threads) {
    if (!(target_ber > 0.0) || !(target_ber < 0.5)) {
        throw DomainError("target_ber must lie in (0, 0.5)");
    }
    if (schemes.empty()) throw DomainError("no schemes to derive thresholds for");
    if (static_cast<double>(sim_budget_bits) * target_ber < 100.0) {
        throw InsufficientBudgetError(
            "simulation budget too small: need at least 100/target_ber bits per point");
    }
    if (!(grid.step_db > 0.0) || !std::isfinite(grid.step_db) ||
        !(grid.max_es_n0_db > grid.min_es_n0_db) || !std::isfinite(grid.min_es_n0_db) ||
        !std::isfinite(grid.max_es_n0_db)) {
        throw ConfigError("malformed threshold grid");
    }

    std::vector<Scheme> order(schemes.begin(), schemes.end());
    std::sort(order.begin(), order.end(),
              [](Scheme a, Scheme b) { return bits_per_symbol(a) < bits_per_symbol(b); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (order[i] == order[i - 1]) throw DomainError("duplicate scheme");
    }
    if (order.front() != Scheme::Bpsk) {
        throw DomainError("threshold derivation requires the bpsk fallback scheme");
    }

    const int last = static_cast<int>(
        std::floor((grid.max_es_n0_db - grid.min_es_n0_db) / grid.step_db + 1e-9));

    AmcPolicy policy;
    policy.target_ber = target_ber;
    policy.hysteresis_db = 0.0;

    for (std::size_t si = 0; si < order.size(); ++si) {
        const Constellation c(order[si]);
        const auto ber_at = [&](int idx) {
            const double es_n0 = grid.min_es_n0_db + grid.step_db * idx;
            const std::uint64_t tag = (static_cast<std::uint64_t>(si) << 32) |
                                      static_cast<std::uint64_t>(idx);
            return measure_ber(c, es_n0, sim_budget_bits, seed, tag, threads).ber();
        };

        int idx;
        if (ber_at(0) <= target_ber) {
            idx = 0;
        } else if (ber_at(last) > target_ber) {
            throw DomainError(std::string("target BER unreachable on the search grid for ") +
                              std::string(scheme_name(order[si])));
        } else {
            // BER decreases with SNR: bisect for the first passing point.
            int lo = 0;   // known failing
            int hi = last; // known passing
            while (hi - lo > 1) {
                const int mid = lo + (hi - lo) / 2;
                (ber_at(mid) <= target_ber ? hi : lo) = mid;
            }
            idx = hi;
        }
        policy.entries.push_back({order[si], grid.min_es_n0_db + grid.step_db * idx});
    }

    for (std::size_t i = 1; i < policy.entries.size(); ++i) {
        const double prev = policy.entries[i - 1].min_snr_db;
        const double cur = policy.entries[i].min_snr_db;
        const bool floor_tie = cur == prev && prev == grid.min_es_n0_db;
        if (cur <= prev && !floor_tie) {
            throw InternalError("derived thresholds do not increase with scheme order");
        }
    }
    policy.validate();
    return policy;
}

Scheme select_scheme(double snr_db, const AmcPolicy& policy, LinkState& state) {
    policy.validate();
    if (!std::isfinite(snr_db)) throw DomainError("snr_db must be finite");
    if (policy.entry_for(state.current_scheme) == nullptr) {
        throw ConfigError("link state holds a scheme the policy does not know");
    }

    // Entries ascend in order, so the last qualifying entry is the highest;
    // when nothing qualifies the bottom entry keeps the link alive.
    const AmcEntry* candidate = &policy.entries.front();
    for (const auto& e : policy.entries) {
        if (e.min_snr_db <= snr_db) candidate = &e;
    }

    Scheme next = state.current_scheme;
    if (bits_per_symbol(candidate->scheme) > bits_per_symbol(state.current_scheme)) {
        // Upgrades must clear the threshold by the hysteresis margin.
        if (snr_db >= candidate->min_snr_db + policy.hysteresis_db) {
            next = candidate->scheme;
        }
    } else {
        next = candidate->scheme;
    }
    state.current_scheme = next;
    state.last_snr_db = snr_db;
    return next;
}

double throughput_bits_per_sec(Scheme s, double symbol_rate_hz) {
    if (!(symbol_rate_hz > 0.0) || !std::isfinite(symbol_rate_hz)) {
        throw DomainError("symbol rate must be positive");
    }
    return static_cast<double>(bits_per_symbol(s)) * symbol_rate_hz;
}

} // namespace sdrlink
