#include "sdrlink/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdrlink/errors.hpp"

namespace sdrlink {

namespace {

// Shortest decimal form that round-trips the exact double.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_le(std::ostream& out, std::uint64_t word, int n_bytes) {
    char bytes[8];
    for (int i = 0; i < n_bytes; ++i) {
        bytes[i] = static_cast<char>((word >> (8 * i)) & 0xffu);
    }
    out.write(bytes, n_bytes);
}

void write_f32_le(std::ostream& out, float v) { write_le(out, std::bit_cast<std::uint32_t>(v), 4); }

void write_iq_header(std::ostream& out, std::uint8_t kind, double sample_rate_hz) {
    out.write("IQF1", 4);
    const char pad[4] = {static_cast<char>(kind), 0, 0, 0};
    out.write(pad, 4);
    write_le(out, std::bit_cast<std::uint64_t>(sample_rate_hz), 8);
}

template <typename Fn>
void to_file(const std::filesystem::path& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    fn(out);
    out.flush();
    if (!out) throw IoError("write to " + path.string() + " failed");
}

double parse_double_or_throw(const std::string& text, const std::string& key) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("bad number for " + key + ": " + text);
    }
    if (used != text.size()) throw ConfigError("bad number for " + key + ": " + text);
    return v;
}

} // namespace

std::string format_ber(double ber) {
    if (!(ber > 0.0)) return "0";
    // Plain decimal, six significant digits, no exponent form.
    const int exp10 = static_cast<int>(std::floor(std::log10(ber)));
    const int decimals = std::max(0, 5 - exp10);
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, ber);
    return buf;
}

void emit_csv(std::span<const LinkReport> reports, std::ostream& out) {
    out << "scheme,snr_db,ebn0_db,bits,bit_errors,ber,goodput_bps,reliable\n";
    for (const LinkReport& r : reports) {
        out << scheme_name(r.scheme) << ',' << format_double(r.snr_db) << ','
            << format_double(r.ebn0_db) << ',' << r.bits_sent << ',' << r.bit_errors << ','
            << format_ber(r.ber) << ',' << format_double(r.goodput_bps) << ','
            << (r.reliable ? '1' : '0') << '\n';
    }
}

void emit_csv(std::span<const LinkReport> reports, const std::filesystem::path& path) {
    to_file(path, [&](std::ostream& out) { emit_csv(reports, out); });
}

void export_iq(std::span<const Complex> samples, double sample_rate_hz, std::ostream& out) {
    write_iq_header(out, 0, sample_rate_hz);
    for (const Complex& s : samples) {
        write_f32_le(out, static_cast<float>(s.real()));
        write_f32_le(out, static_cast<float>(s.imag()));
    }
}

void export_iq(std::span<const Complex> samples, double sample_rate_hz,
               const std::filesystem::path& path) {
    to_file(path, [&](std::ostream& out) { export_iq(samples, sample_rate_hz, out); });
}

void export_iq(const RealSamples& samples, std::ostream& out) {
    write_iq_header(out, 1, samples.sample_rate_hz);
    for (double s : samples.samples) {
        write_f32_le(out, static_cast<float>(s));
    }
}

void export_iq(const RealSamples& samples, const std::filesystem::path& path) {
    to_file(path, [&](std::ostream& out) { export_iq(samples, out); });
}

std::string format_policy(const AmcPolicy& policy) {
    std::ostringstream out;
    out << "target_ber = " << format_double(policy.target_ber) << '\n';
    out << "hysteresis_db = " << format_double(policy.hysteresis_db) << '\n';
    for (const AmcEntry& e : policy.entries) {
        out << "threshold." << scheme_name(e.scheme) << " = " << format_double(e.min_snr_db)
            << '\n';
    }
    return out.str();
}

AmcPolicy parse_policy(std::istream& in) {
    AmcPolicy policy;
    std::string line;
    bool have_target = false;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("policy line is not key = value: " + line);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "target_ber") {
            policy.target_ber = parse_double_or_throw(value, key);
            have_target = true;
        } else if (key == "hysteresis_db") {
            policy.hysteresis_db = parse_double_or_throw(value, key);
        } else if (key.rfind("threshold.", 0) == 0) {
            const auto scheme = scheme_from_name(key.substr(10));
            if (!scheme) throw ConfigError("unknown scheme in policy key: " + key);
            if (std::any_of(policy.entries.begin(), policy.entries.end(),
                            [&](const AmcEntry& e) { return e.scheme == *scheme; })) {
                throw ConfigError("duplicate policy key: " + key);
            }
            policy.entries.push_back({*scheme, parse_double_or_throw(value, key)});
        } else {
            throw ConfigError("unknown policy key: " + key);
        }
    }
    if (!have_target) throw ConfigError("policy file lacks target_ber");
    std::sort(policy.entries.begin(), policy.entries.end(), [](const AmcEntry& a, const AmcEntry& b) {
        return bits_per_symbol(a.scheme) < bits_per_symbol(b.scheme);
    });
    policy.validate();
    return policy;
}

void write_policy(const AmcPolicy& policy, const std::filesystem::path& path) {
    to_file(path, [&](std::ostream& out) { out << format_policy(policy); });
}

AmcPolicy load_policy(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_policy(in);
}

} // namespace sdrlink
