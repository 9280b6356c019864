#include "sdrlink/channel.hpp"

#include <algorithm>
#include <cmath>

#include "sdrlink/errors.hpp"
#include "sdrlink/rng.hpp"

namespace sdrlink {

IqSamples apply_awgn(std::span<const Complex> symbols, const ChannelConfig& cfg,
                     std::uint64_t first_symbol_index) {
    if (!std::isfinite(cfg.es_n0_db)) {
        throw ConfigError("es_n0_db must be finite");
    }
    // Total noise power 10^(-EsN0/10), split evenly between I and Q.
    const double sigma_dim = std::sqrt(0.5 * db_to_linear(-cfg.es_n0_db));
    const rng::Stream noise = rng::make_stream(cfg.seed, rng::kTagChannelNoise);

    IqSamples out;
    out.reserve(symbols.size());
    for (std::size_t j = 0; j < symbols.size(); ++j) {
        const Complex& s = symbols[j];
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw InvalidSampleError("non-finite symbol");
        }
        const auto [n_i, n_q] = rng::normal_pair(noise, first_symbol_index + j);
        out.push_back(Complex(s.real() + sigma_dim * n_i, s.imag() + sigma_dim * n_q));
    }
    return out;
}

void PathLossModel::validate() const {
    if (!std::isfinite(snr0_db)) throw ConfigError("snr0_db must be finite");
    if (!(d0_m > 0.0) || !std::isfinite(d0_m)) throw ConfigError("d0_m must be positive");
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw ConfigError("path-loss exponent must be positive");
    }
}

double snr_from_distance(double distance_m, const PathLossModel& model) {
    model.validate();
    if (!(distance_m > 0.0) || !std::isfinite(distance_m)) {
        throw DomainError("distance must be positive");
    }
    return model.snr0_db - 10.0 * model.exponent * std::log10(distance_m / model.d0_m);
}

double estimate_snr(std::span<const Complex> received, std::span<const Complex> reference) {
    if (received.size() != reference.size()) {
        throw FramingError("received and reference lengths differ");
    }
    if (received.size() < 100) {
        throw InsufficientDataError("need at least 100 symbols to estimate SNR");
    }
    double sig = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i < received.size(); ++i) {
        sig += std::norm(reference[i]);
        err += std::norm(received[i] - reference[i]);
    }
    if (err == 0.0) return 100.0;
    return std::min(100.0, linear_to_db(sig / err));
}

} // namespace sdrlink
