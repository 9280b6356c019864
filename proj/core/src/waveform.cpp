#include "sdrlink/waveform.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "sdrlink/errors.hpp"

namespace sdrlink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_whole_cycles(double freq_hz, const PassbandParams& p, const char* what) {
    const double cycles = p.cycles_per_symbol(freq_hz);
    if (cycles < 0.5 || std::abs(cycles - std::round(cycles)) > 1e-9) {
        throw ConfigError(std::string(what) + " must complete a whole number of cycles per symbol");
    }
}

// One symbol period of the carrier. Whole cycles per symbol means every
// symbol sees this exact sample grid, which keeps antipodal symbols exact
// negations of each other.
struct CarrierTable {
    std::vector<double> cos_t;
    std::vector<double> sin_t;

    CarrierTable(double freq_hz, const PassbandParams& p) {
        cos_t.resize(static_cast<std::size_t>(p.samples_per_symbol));
        sin_t.resize(static_cast<std::size_t>(p.samples_per_symbol));
        for (int i = 0; i < p.samples_per_symbol; ++i) {
            const double th = kTwoPi * freq_hz * static_cast<double>(i) / p.sample_rate_hz;
            cos_t[static_cast<std::size_t>(i)] = std::cos(th);
            sin_t[static_cast<std::size_t>(i)] = std::sin(th);
        }
    }
};

} // namespace

double PassbandParams::cycles_per_symbol(double freq_hz) const {
    return freq_hz * static_cast<double>(samples_per_symbol) / sample_rate_hz;
}

void PassbandParams::validate() const {
    if (!(sample_rate_hz > 0.0) || !std::isfinite(sample_rate_hz)) {
        throw ConfigError("sample rate must be positive");
    }
    if (!(carrier_frequency_hz > 0.0) || !std::isfinite(carrier_frequency_hz)) {
        throw ConfigError("carrier frequency must be positive");
    }
    if (samples_per_symbol < 4) {
        throw ConfigError("need at least 4 samples per symbol");
    }
    if (sample_rate_hz <= 2.0 * carrier_frequency_hz) {
        throw ConfigError("sample rate must exceed twice the carrier frequency");
    }
    require_whole_cycles(carrier_frequency_hz, *this, "carrier");
    if (!std::isfinite(ask_a0) || !std::isfinite(ask_a1) || ask_a0 < 0.0 || !(ask_a1 > ask_a0)) {
        throw ConfigError("ask amplitudes need 0 <= a0 < a1");
    }
}

void PassbandParams::validate_fsk() const {
    validate();
    if (!(fsk_f0_hz > 0.0) || !(fsk_f1_hz > 0.0) || !std::isfinite(fsk_f0_hz) ||
        !std::isfinite(fsk_f1_hz)) {
        throw ConfigError("fsk tones must be positive");
    }
    if (fsk_f0_hz == fsk_f1_hz) {
        throw ConfigError("fsk tones must differ");
    }
    if (sample_rate_hz <= 2.0 * fsk_f0_hz || sample_rate_hz <= 2.0 * fsk_f1_hz) {
        throw ConfigError("sample rate must exceed twice each fsk tone");
    }
    require_whole_cycles(fsk_f0_hz, *this, "fsk tone f0");
    require_whole_cycles(fsk_f1_hz, *this, "fsk tone f1");
}

RealSamples synth_ask(std::span<const std::uint8_t> bits, const PassbandParams& p) {
    p.validate();
    const CarrierTable carrier(p.carrier_frequency_hz, p);
    RealSamples out;
    out.sample_rate_hz = p.sample_rate_hz;
    out.samples.reserve(bits.size() * static_cast<std::size_t>(p.samples_per_symbol));
    for (std::uint8_t bit : bits) {
        const double a = bit ? p.ask_a1 : p.ask_a0;
        for (int i = 0; i < p.samples_per_symbol; ++i) {
            out.samples.push_back(a * carrier.sin_t[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

RealSamples synth_fsk(std::span<const std::uint8_t> bits, const PassbandParams& p) {
    p.validate_fsk();
    RealSamples out;
    out.sample_rate_hz = p.sample_rate_hz;
    out.samples.reserve(bits.size() * static_cast<std::size_t>(p.samples_per_symbol));
    // Phase accumulator keeps the waveform continuous across tone switches.
    double phase = 0.0;
    for (std::uint8_t bit : bits) {
        const double step = kTwoPi * (bit ? p.fsk_f1_hz : p.fsk_f0_hz) / p.sample_rate_hz;
        for (int i = 0; i < p.samples_per_symbol; ++i) {
            out.samples.push_back(std::sin(phase));
            phase += step;
            if (phase >= kTwoPi) phase -= kTwoPi;
        }
    }
    return out;
}

RealSamples synth_psk_qam(std::span<const Complex> symbols, const PassbandParams& p) {
    p.validate();
    const CarrierTable carrier(p.carrier_frequency_hz, p);
    RealSamples out;
    out.sample_rate_hz = p.sample_rate_hz;
    out.samples.reserve(symbols.size() * static_cast<std::size_t>(p.samples_per_symbol));
    for (const Complex& sym : symbols) {
        for (int i = 0; i < p.samples_per_symbol; ++i) {
            const std::size_t k = static_cast<std::size_t>(i);
            out.samples.push_back(sym.real() * carrier.cos_t[k] - sym.imag() * carrier.sin_t[k]);
        }
    }
    return out;
}

IqSamples demod_coherent(const RealSamples& passband, const PassbandParams& p,
                         std::size_t n_symbols) {
    p.validate();
    if (passband.sample_rate_hz != p.sample_rate_hz) {
        throw FramingError("sample rate does not match the passband parameters");
    }
    if (passband.samples.size() != n_symbols * static_cast<std::size_t>(p.samples_per_symbol)) {
        throw FramingError("sample count does not match symbol framing");
    }
    const CarrierTable carrier(p.carrier_frequency_hz, p);
    IqSamples out;
    out.reserve(n_symbols);
    const double gain = 2.0 / static_cast<double>(p.samples_per_symbol);
    std::size_t n = 0;
    for (std::size_t sym = 0; sym < n_symbols; ++sym) {
        double acc_i = 0.0;
        double acc_q = 0.0;
        for (int i = 0; i < p.samples_per_symbol; ++i, ++n) {
            const std::size_t k = static_cast<std::size_t>(i);
            acc_i += passband.samples[n] * carrier.cos_t[k];
            acc_q -= passband.samples[n] * carrier.sin_t[k];
        }
        out.push_back(Complex(gain * acc_i, gain * acc_q));
    }
    return out;
}

} // namespace sdrlink
