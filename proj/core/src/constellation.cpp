#include "sdrlink/constellation.hpp"

#include <array>
#include <cmath>

#include "sdrlink/errors.hpp"

namespace sdrlink {

namespace {

constexpr std::array<Scheme, 4> kAllSchemes = {Scheme::Bpsk, Scheme::Qpsk, Scheme::Qam16,
                                               Scheme::Qam64};

constexpr std::uint32_t gray(std::uint32_t i) { return i ^ (i >> 1); }

} // namespace

int scheme_order(Scheme s) {
    switch (s) {
    case Scheme::Bpsk: return 2;
    case Scheme::Qpsk: return 4;
    case Scheme::Qam16: return 16;
    case Scheme::Qam64: return 64;
    }
    throw DomainError("unknown scheme");
}

int bits_per_symbol(Scheme s) {
    switch (s) {
    case Scheme::Bpsk: return 1;
    case Scheme::Qpsk: return 2;
    case Scheme::Qam16: return 4;
    case Scheme::Qam64: return 6;
    }
    throw DomainError("unknown scheme");
}

std::string_view scheme_name(Scheme s) {
    switch (s) {
    case Scheme::Bpsk: return "bpsk";
    case Scheme::Qpsk: return "qpsk";
    case Scheme::Qam16: return "qam16";
    case Scheme::Qam64: return "qam64";
    }
    throw DomainError("unknown scheme");
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
    for (Scheme s : kAllSchemes) {
        if (scheme_name(s) == name) return s;
    }
    return std::nullopt;
}

std::span<const Scheme> all_schemes() { return kAllSchemes; }

Constellation::Constellation(Scheme scheme) : scheme_(scheme) {
    bits_ = sdrlink::bits_per_symbol(scheme);
    axes_ = (scheme == Scheme::Bpsk) ? 1 : 2;
    axis_bits_ = bits_ / axes_;
    levels_ = 1 << axis_bits_;

    code_of_level_.resize(static_cast<std::size_t>(levels_));
    level_of_code_.resize(static_cast<std::size_t>(levels_));
    if (scheme == Scheme::Bpsk) {
        // Label 0 is the 0-degree point (+1), label 1 the 180-degree point.
        code_of_level_ = {1, 0};
    } else {
        // Ascending amplitude levels follow the reflected Gray sequence, so
        // adjacent levels differ in one bit.
        for (int i = 0; i < levels_; ++i) {
            code_of_level_[static_cast<std::size_t>(i)] = gray(static_cast<std::uint32_t>(i));
        }
    }
    for (int i = 0; i < levels_; ++i) {
        level_of_code_[code_of_level_[static_cast<std::size_t>(i)]] =
            static_cast<std::uint32_t>(i);
    }

    // Normalize to unit average symbol energy: levels are odd integers
    // +-1, +-3, ... before scaling.
    double mean_sq = 0.0;
    for (int i = 0; i < levels_; ++i) {
        const double level = static_cast<double>(2 * i - (levels_ - 1));
        mean_sq += level * level;
    }
    mean_sq /= static_cast<double>(levels_);
    scale_ = 1.0 / std::sqrt(static_cast<double>(axes_) * mean_sq);

    const auto level_value = [&](std::uint32_t code) {
        const int idx = static_cast<int>(level_of_code_[code]);
        return static_cast<double>(2 * idx - (levels_ - 1)) * scale_;
    };

    points_.resize(static_cast<std::size_t>(scheme_order(scheme)));
    for (std::uint32_t label = 0; label < points_.size(); ++label) {
        if (axes_ == 1) {
            points_[label] = Complex(level_value(label), 0.0);
        } else {
            const std::uint32_t code_i = label >> axis_bits_;
            const std::uint32_t code_q = label & static_cast<std::uint32_t>(levels_ - 1);
            points_[label] = Complex(level_value(code_i), level_value(code_q));
        }
    }
}

IqSamples Constellation::map_bits(std::span<const std::uint8_t> bits) const {
    if (bits.size() % static_cast<std::size_t>(bits_) != 0) {
        throw LengthError("bit count must be a multiple of bits per symbol");
    }
    IqSamples out;
    out.reserve(bits.size() / static_cast<std::size_t>(bits_));
    for (std::size_t i = 0; i < bits.size(); i += static_cast<std::size_t>(bits_)) {
        std::uint32_t label = 0;
        for (int b = 0; b < bits_; ++b) {
            label = (label << 1) | (bits[i + static_cast<std::size_t>(b)] ? 1u : 0u);
        }
        out.push_back(points_[label]);
    }
    return out;
}

std::uint32_t Constellation::slice_axis(double coord) const {
    // Fractional level index; points sit at integer values of t.
    const double t = (coord / scale_ + static_cast<double>(levels_ - 1)) * 0.5;
    const double lo_f = std::floor(t);
    const int lo = static_cast<int>(lo_f);
    int idx;
    if (lo < 0) {
        idx = 0;
    } else if (lo >= levels_ - 1) {
        idx = levels_ - 1;
    } else {
        const double frac = t - lo_f;
        if (frac > 0.5) {
            idx = lo + 1;
        } else if (frac < 0.5) {
            idx = lo;
        } else {
            // Equidistant: take the smaller Gray code.
            const std::uint32_t c0 = code_of_level_[static_cast<std::size_t>(lo)];
            const std::uint32_t c1 = code_of_level_[static_cast<std::size_t>(lo + 1)];
            idx = (c0 < c1) ? lo : lo + 1;
        }
    }
    return code_of_level_[static_cast<std::size_t>(idx)];
}

std::uint32_t Constellation::nearest_label(Complex sample) const {
    if (!std::isfinite(sample.real()) || !std::isfinite(sample.imag())) {
        throw InvalidSampleError("non-finite sample");
    }
    if (axes_ == 1) {
        return slice_axis(sample.real());
    }
    return (slice_axis(sample.real()) << axis_bits_) | slice_axis(sample.imag());
}

BitStream Constellation::demap_hard(std::span<const Complex> samples) const {
    BitStream out;
    out.reserve(samples.size() * static_cast<std::size_t>(bits_));
    for (const Complex& s : samples) {
        const std::uint32_t label = nearest_label(s);
        for (int b = bits_ - 1; b >= 0; --b) {
            out.push_back(static_cast<std::uint8_t>((label >> b) & 1u));
        }
    }
    return out;
}

Constellation build_constellation(Scheme scheme) { return Constellation(scheme); }

} // namespace sdrlink
