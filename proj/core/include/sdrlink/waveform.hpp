#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "sdrlink/types.hpp"

namespace sdrlink {

// Shared passband parameterization. The carrier (and both FSK tones) must
// complete a whole number of cycles per symbol, and every frequency must
// respect Nyquist; validate() enforces both.
struct PassbandParams {
    double carrier_frequency_hz = 2000.0;
    double sample_rate_hz = 48000.0;
    int samples_per_symbol = 48;
    double fsk_f0_hz = 1000.0; // tone for bit 0
    double fsk_f1_hz = 2000.0; // tone for bit 1
    double ask_a0 = 0.5;       // amplitude for bit 0
    double ask_a1 = 1.0;       // amplitude for bit 1

    void validate() const;            // throws ConfigError
    void validate_fsk() const;        // additionally checks both tones
    double cycles_per_symbol(double freq_hz) const;
};

// On-off-style amplitude keying: a(bit) * sin(2*pi*fc*t), one bit per symbol.
RealSamples synth_ask(std::span<const std::uint8_t> bits, const PassbandParams& p);

// Binary FSK, phase-continuous across symbol boundaries.
RealSamples synth_fsk(std::span<const std::uint8_t> bits, const PassbandParams& p);

// Quadrature upconversion of baseband symbols:
//   s(t) = I * cos(2*pi*fc*t) - Q * sin(2*pi*fc*t)
RealSamples synth_psk_qam(std::span<const Complex> symbols, const PassbandParams& p);

// Coherent correlator receiver for synth_psk_qam output. Recovers exactly
// n_symbols baseband symbols; sample count must equal
// n_symbols * samples_per_symbol.
IqSamples demod_coherent(const RealSamples& passband, const PassbandParams& p,
                         std::size_t n_symbols);

} // namespace sdrlink
