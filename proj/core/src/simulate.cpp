#include "sdrlink/simulate.hpp"

#include <cmath>

#include "sdrlink/errors.hpp"
#include "sdrlink/montecarlo.hpp"

namespace sdrlink {

namespace {

// An estimate with at least this many errors has a usable confidence
// interval; below it the point is flagged unreliable.
constexpr std::uint64_t kMinErrorsReliable = 100;

LinkReport make_report(Scheme scheme, double es_n0_db, double eb_n0_db,
                       const BerMeasurement& m, double symbol_rate_hz) {
    LinkReport r;
    r.scheme = scheme;
    r.snr_db = es_n0_db;
    r.ebn0_db = eb_n0_db;
    r.bits_sent = m.bits_sent;
    r.bit_errors = m.bit_errors;
    r.ber = m.ber();
    r.goodput_bps = throughput_bits_per_sec(scheme, symbol_rate_hz) * (1.0 - r.ber);
    r.reliable = m.bit_errors >= kMinErrorsReliable;
    return r;
}

} // namespace

void SweepSpec::validate() const {
    if (ebn0_db_points.empty()) throw ConfigError("sweep needs at least one Eb/N0 point");
    for (double p : ebn0_db_points) {
        if (!std::isfinite(p)) throw ConfigError("Eb/N0 points must be finite");
    }
    if (bits_per_point < 10'000) {
        throw ConfigError("sweep needs at least 10000 bits per point");
    }
    if (bits_per_point % static_cast<std::uint64_t>(bits_per_symbol(scheme)) != 0) {
        throw ConfigError("bits per point must be a multiple of bits per symbol");
    }
    if (!(symbol_rate_hz > 0.0) || !std::isfinite(symbol_rate_hz)) {
        throw ConfigError("symbol rate must be positive");
    }
}

std::vector<LinkReport> run_ber_sweep(const SweepSpec& spec) {
    spec.validate();
    const Constellation c(spec.scheme);
    std::vector<LinkReport> reports;
    reports.reserve(spec.ebn0_db_points.size());
    for (std::size_t i = 0; i < spec.ebn0_db_points.size(); ++i) {
        const double eb_n0 = spec.ebn0_db_points[i];
        const double es_n0 = ebn0_to_esn0_db(eb_n0, c.bits_per_symbol());
        const BerMeasurement m =
            measure_ber(c, es_n0, spec.bits_per_point, spec.seed, i, spec.threads);
        reports.push_back(make_report(spec.scheme, es_n0, eb_n0, m, spec.symbol_rate_hz));
    }
    return reports;
}

void RangeSimSpec::validate() const {
    if (distances_m.empty()) throw ConfigError("range sim needs at least one distance");
    double prev = 0.0;
    for (double d : distances_m) {
        if (!(d > 0.0) || !std::isfinite(d)) throw ConfigError("distances must be positive");
        if (d <= prev) throw ConfigError("distances must be strictly increasing");
        prev = d;
    }
    path_loss.validate();
    policy.validate();
    if (bits_per_point < 10'000) {
        throw ConfigError("range sim needs at least 10000 bits per point");
    }
    if (!(symbol_rate_hz > 0.0) || !std::isfinite(symbol_rate_hz)) {
        throw ConfigError("symbol rate must be positive");
    }
}

std::vector<LinkReport> run_range_sim(const RangeSimSpec& spec) {
    spec.validate();
    std::vector<LinkReport> reports;
    reports.reserve(spec.distances_m.size());
    // Cold start on the most robust scheme; nearest point first.
    LinkState state{spec.policy.entries.front().scheme, 0.0};
    for (std::size_t i = 0; i < spec.distances_m.size(); ++i) {
        const double snr_db = snr_from_distance(spec.distances_m[i], spec.path_loss);
        const Scheme scheme = select_scheme(snr_db, spec.policy, state);
        const Constellation c(scheme);
        const std::uint64_t tag = 0x52414e47'00000000ULL | static_cast<std::uint64_t>(i);
        const BerMeasurement m =
            measure_ber(c, snr_db, spec.bits_per_point, spec.seed, tag, spec.threads);
        reports.push_back(make_report(scheme, snr_db,
                                      esn0_to_ebn0_db(snr_db, c.bits_per_symbol()), m,
                                      spec.symbol_rate_hz));
    }
    return reports;
}

std::vector<double> log_spaced_distances(double dmin_m, double dmax_m, int points) {
    if (!(dmin_m > 0.0) || !(dmax_m > dmin_m) || !std::isfinite(dmax_m)) {
        throw ConfigError("need 0 < dmin < dmax");
    }
    if (points < 2) throw ConfigError("need at least 2 distance points");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    const double lmin = std::log10(dmin_m);
    const double lmax = std::log10(dmax_m);
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(points - 1);
        out.push_back(std::pow(10.0, lmin + (lmax - lmin) * f));
    }
    // Guard against rounding pushing the endpoint off the requested value.
    out.front() = dmin_m;
    out.back() = dmax_m;
    return out;
}

} // namespace sdrlink
