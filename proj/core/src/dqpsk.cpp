#include "sdrlink/dqpsk.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sdrlink/errors.hpp"

namespace sdrlink {

namespace {

// Indexed by dibit value (MSB-first): 00, 01, 10, 11.
constexpr std::array<int, 4> kShiftForDibit = {0, 90, 270, 180};

// Indexed by shift / 90.
constexpr std::array<unsigned, 4> kDibitForQuarter = {0b00, 0b01, 0b11, 0b10};

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

} // namespace

int dqpsk_shift_degrees(unsigned dibit) {
    if (dibit > 3) throw DomainError("dibit out of range");
    return kShiftForDibit[dibit];
}

unsigned dqpsk_dibit_for_shift(int shift_degrees) {
    if (shift_degrees % 90 != 0) throw DomainError("shift must be a multiple of 90 degrees");
    int q = (shift_degrees / 90) % 4;
    if (q < 0) q += 4;
    return kDibitForQuarter[static_cast<std::size_t>(q)];
}

IqSamples dqpsk_encode(std::span<const std::uint8_t> bits, double reference_phase_deg) {
    if (bits.size() % 2 != 0) throw LengthError("dqpsk needs an even number of bits");
    IqSamples out;
    out.reserve(bits.size() / 2);
    int accum_deg = 0; // integer degrees: exact modular accumulation
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        const unsigned dibit = ((bits[i] ? 1u : 0u) << 1) | (bits[i + 1] ? 1u : 0u);
        accum_deg = (accum_deg + kShiftForDibit[dibit]) % 360;
        out.push_back(std::polar(1.0, deg2rad(reference_phase_deg + accum_deg)));
    }
    return out;
}

BitStream dqpsk_decode(std::span<const Complex> symbols, double reference_phase_deg) {
    BitStream out;
    out.reserve(symbols.size() * 2);
    Complex prev = std::polar(1.0, deg2rad(reference_phase_deg));
    for (const Complex& s : symbols) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw InvalidSampleError("non-finite symbol");
        }
        if (s == Complex(0.0, 0.0)) {
            throw InvalidSampleError("zero-magnitude symbol has no phase");
        }
        double diff = std::arg(s * std::conj(prev)) * 180.0 / std::numbers::pi;
        if (diff < 0.0) diff += 360.0;
        if (diff >= 360.0) diff -= 360.0;

        // Quantize to the nearest multiple of 90; on an exact tie prefer the
        // smaller shift value (mod 360).
        const int k0 = static_cast<int>(std::floor(diff / 90.0));
        const double d_down = diff - 90.0 * k0;
        const double d_up = 90.0 * (k0 + 1) - diff;
        int k;
        if (d_down < d_up) {
            k = k0;
        } else if (d_up < d_down) {
            k = k0 + 1;
        } else {
            const int s_down = (k0 % 4) * 90;
            const int s_up = ((k0 + 1) % 4) * 90;
            k = (s_down < s_up) ? k0 : k0 + 1;
        }
        const unsigned dibit = kDibitForQuarter[static_cast<std::size_t>(k % 4)];
        out.push_back(static_cast<std::uint8_t>((dibit >> 1) & 1u));
        out.push_back(static_cast<std::uint8_t>(dibit & 1u));
        prev = s;
    }
    return out;
}

} // namespace sdrlink
