#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "sdrlink/channel.hpp"
#include "sdrlink/constellation.hpp"
#include "sdrlink/errors.hpp"

using namespace sdrlink;

namespace {

IqSamples qpsk_burst(std::size_t n, std::uint64_t seed) {
    const Constellation c(Scheme::Qpsk);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> label(0, 3);
    IqSamples out(n);
    for (auto& s : out) s = c.point(label(gen));
    return out;
}

} // namespace

TEST_CASE("very high snr is a passthrough") {
    const IqSamples tx = qpsk_burst(1000, 1);
    const IqSamples rx = apply_awgn(tx, {300.0, 7});
    REQUIRE(rx.size() == tx.size());
    for (std::size_t i = 0; i < tx.size(); ++i) {
        CHECK(std::abs(rx[i] - tx[i]) <= 1e-12);
    }
}

TEST_CASE("same seed reproduces, different seed does not") {
    const IqSamples tx = qpsk_burst(512, 2);
    const IqSamples a = apply_awgn(tx, {10.0, 42});
    const IqSamples b = apply_awgn(tx, {10.0, 42});
    CHECK(a == b);
    const IqSamples c = apply_awgn(tx, {10.0, 43});
    CHECK(a != c);
}

TEST_CASE("chunked processing reproduces the whole burst") {
    const IqSamples tx = qpsk_burst(1000, 3);
    const ChannelConfig cfg{6.0, 99};
    const IqSamples whole = apply_awgn(tx, cfg);

    IqSamples parts;
    const std::size_t cut = 317;
    const auto head = apply_awgn(std::span<const Complex>(tx).subspan(0, cut), cfg, 0);
    const auto tail = apply_awgn(std::span<const Complex>(tx).subspan(cut), cfg, cut);
    parts.insert(parts.end(), head.begin(), head.end());
    parts.insert(parts.end(), tail.begin(), tail.end());
    CHECK(parts == whole);
}

TEST_CASE("noise power matches the configured Es/N0") {
    const std::size_t n = 100'000;
    const IqSamples zeros(n, Complex(0.0, 0.0));
    for (double es_n0 : {0.0, 10.0}) {
        CAPTURE(es_n0);
        const IqSamples noise = apply_awgn(zeros, {es_n0, 5});
        double total = 0.0;
        double mean_i = 0.0;
        double mean_q = 0.0;
        double cross = 0.0;
        for (const Complex& z : noise) {
            total += std::norm(z);
            mean_i += z.real();
            mean_q += z.imag();
            cross += z.real() * z.imag();
        }
        const double want = db_to_linear(-es_n0);
        CHECK(total / n == doctest::Approx(want).epsilon(0.02));
        CHECK(std::abs(mean_i / n) < 4.0 * std::sqrt(want / 2.0 / n));
        CHECK(std::abs(mean_q / n) < 4.0 * std::sqrt(want / 2.0 / n));
        // I and Q rails are uncorrelated (circular symmetry).
        CHECK(std::abs(cross / n) < 4.0 * (want / 2.0) / std::sqrt(double(n)));
    }
}

TEST_CASE("awgn input validation") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)apply_awgn(IqSamples{Complex(nan, 0.0)}, {10.0, 1}),
                    InvalidSampleError);
    CHECK_THROWS_AS((void)apply_awgn(qpsk_burst(4, 1), {nan, 1}), ConfigError);
    CHECK(apply_awgn({}, {10.0, 1}).empty());
}

TEST_CASE("path loss model") {
    const PathLossModel m{26.0, 1.0, 2.0};
    CHECK(snr_from_distance(1.0, m) == doctest::Approx(26.0).epsilon(1e-12));
    CHECK(snr_from_distance(10.0, m) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(snr_from_distance(100.0, m) == doctest::Approx(-14.0).epsilon(1e-12));

    const PathLossModel steep{20.0, 2.0, 3.5};
    CHECK(snr_from_distance(20.0, steep) == doctest::Approx(20.0 - 35.0).epsilon(1e-12));

    double prev = snr_from_distance(0.5, m);
    for (double d = 1.0; d < 300.0; d *= 1.7) {
        const double snr = snr_from_distance(d, m);
        CHECK(snr < prev);
        prev = snr;
    }

    CHECK_THROWS_AS(snr_from_distance(0.0, m), DomainError);
    CHECK_THROWS_AS(snr_from_distance(-4.0, m), DomainError);
    CHECK_THROWS_AS(snr_from_distance(1.0, PathLossModel{26.0, 0.0, 2.0}), ConfigError);
    CHECK_THROWS_AS(snr_from_distance(1.0, PathLossModel{26.0, 1.0, -1.0}), ConfigError);
}

TEST_CASE("snr estimate recovers the configured channel") {
    const IqSamples tx = qpsk_burst(100'000, 9);
    for (double es_n0 : {0.0, 10.0, 20.0}) {
        CAPTURE(es_n0);
        const IqSamples rx = apply_awgn(tx, {es_n0, 31});
        CHECK(std::abs(estimate_snr(rx, tx) - es_n0) < 0.15);
    }
}

TEST_CASE("snr estimate edge cases") {
    const IqSamples tx = qpsk_burst(200, 10);
    CHECK(estimate_snr(tx, tx) == 100.0);

    // All-zero receive: error power equals signal power, hence 0 dB.
    const IqSamples silent(tx.size(), Complex(0.0, 0.0));
    CHECK(estimate_snr(silent, tx) == doctest::Approx(0.0).epsilon(1e-12));

    const IqSamples short_rx(tx.begin(), tx.begin() + 99);
    const IqSamples short_tx(tx.begin(), tx.begin() + 99);
    CHECK_THROWS_AS(estimate_snr(short_rx, short_tx), InsufficientDataError);
    CHECK_NOTHROW(estimate_snr(IqSamples(tx.begin(), tx.begin() + 100),
                               IqSamples(tx.begin(), tx.begin() + 100)));
    CHECK_THROWS_AS(estimate_snr(short_rx, tx), FramingError);
}
