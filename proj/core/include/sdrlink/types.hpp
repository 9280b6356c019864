#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace sdrlink {

using Complex = std::complex<double>;
using IqSamples = std::vector<Complex>;

// One bit per element, values 0 or 1.
using BitStream = std::vector<std::uint8_t>;

// Real-valued passband signal tied to its sample rate.
struct RealSamples {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

// Es/N0 and Eb/N0 differ by the bits carried per symbol.
inline double ebn0_to_esn0_db(double ebn0_db, int bits_per_symbol) {
    return ebn0_db + linear_to_db(static_cast<double>(bits_per_symbol));
}
inline double esn0_to_ebn0_db(double esn0_db, int bits_per_symbol) {
    return esn0_db - linear_to_db(static_cast<double>(bits_per_symbol));
}

} // namespace sdrlink
