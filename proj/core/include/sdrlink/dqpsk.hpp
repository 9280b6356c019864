#pragma once

#include <cstdint>
#include <span>

#include "sdrlink/types.hpp"

namespace sdrlink {

// Differential QPSK. Information rides on the phase CHANGE between
// consecutive symbols:
//
//   dibit 00 -> +0 deg     dibit 01 -> +90 deg
//   dibit 11 -> +180 deg   dibit 10 -> +270 deg
//
// so a carrier-phase rotation common to a whole burst cancels out.

// Phase shift in degrees for a dibit (MSB-first, value 0..3).
int dqpsk_shift_degrees(unsigned dibit);

// Inverse of dqpsk_shift_degrees; shift must be one of {0, 90, 180, 270}.
unsigned dqpsk_dibit_for_shift(int shift_degrees);

// bits.size() must be even. Emits one unit-magnitude symbol per dibit;
// the first symbol's phase is reference_phase_deg plus the first shift.
IqSamples dqpsk_encode(std::span<const std::uint8_t> bits, double reference_phase_deg = 0.0);

// Recovers one dibit per symbol from phase differences, quantized to the
// nearest multiple of 90 deg (exact 45 deg ties resolve to the smaller
// shift). Rejects NaN/Inf and zero-magnitude symbols.
BitStream dqpsk_decode(std::span<const Complex> symbols, double reference_phase_deg = 0.0);

} // namespace sdrlink
