#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "sdrlink/amc.hpp"
#include "sdrlink/simulate.hpp"

namespace sdrlink {

// CSV with header
//   scheme,snr_db,ebn0_db,bits,bit_errors,ber,goodput_bps,reliable
// UTF-8, LF line endings. `ber` is printed as a plain decimal with six
// significant digits; other reals use shortest round-trip form.
void emit_csv(std::span<const LinkReport> reports, std::ostream& out);
void emit_csv(std::span<const LinkReport> reports, const std::filesystem::path& path);

std::string format_ber(double ber); // the 6-significant-digit form used above

// Raw IQ capture. 16-byte header: magic "IQF1", one kind byte
// (0 = complex, 1 = real), three zero bytes, then the sample rate as a
// little-endian float64. Payload is little-endian float32; complex captures
// interleave I then Q.
void export_iq(std::span<const Complex> samples, double sample_rate_hz, std::ostream& out);
void export_iq(std::span<const Complex> samples, double sample_rate_hz,
               const std::filesystem::path& path);
void export_iq(const RealSamples& samples, std::ostream& out);
void export_iq(const RealSamples& samples, const std::filesystem::path& path);

// Key-value policy file (same shape as CLI config files).
std::string format_policy(const AmcPolicy& policy);
AmcPolicy parse_policy(std::istream& in);
void write_policy(const AmcPolicy& policy, const std::filesystem::path& path);
AmcPolicy load_policy(const std::filesystem::path& path);

} // namespace sdrlink
