#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sdrlink/dqpsk.hpp"
#include "sdrlink/errors.hpp"

using namespace sdrlink;

namespace {

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

BitStream random_even_bits(std::size_t n_dibits, std::mt19937_64& gen) {
    BitStream bits(2 * n_dibits);
    for (auto& b : bits) b = static_cast<std::uint8_t>(gen() & 1u);
    return bits;
}

IqSamples rotate(const IqSamples& in, double deg) {
    IqSamples out = in;
    const Complex r = std::polar(1.0, deg2rad(deg));
    for (auto& s : out) s *= r;
    return out;
}

} // namespace

TEST_CASE("dibit to phase-shift table") {
    CHECK(dqpsk_shift_degrees(0b00) == 0);
    CHECK(dqpsk_shift_degrees(0b01) == 90);
    CHECK(dqpsk_shift_degrees(0b11) == 180);
    CHECK(dqpsk_shift_degrees(0b10) == 270);
    CHECK_THROWS_AS(dqpsk_shift_degrees(4), DomainError);

    CHECK(dqpsk_dibit_for_shift(0) == 0b00);
    CHECK(dqpsk_dibit_for_shift(90) == 0b01);
    CHECK(dqpsk_dibit_for_shift(180) == 0b11);
    CHECK(dqpsk_dibit_for_shift(270) == 0b10);
    CHECK(dqpsk_dibit_for_shift(360) == 0b00);
    CHECK(dqpsk_dibit_for_shift(-90) == 0b10);
    CHECK_THROWS_AS(dqpsk_dibit_for_shift(45), DomainError);
}

TEST_CASE("encode accumulates phase shifts") {
    const IqSamples zero = dqpsk_encode(std::vector<std::uint8_t>{0, 0});
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(zero[0].imag() == doctest::Approx(0.0).epsilon(1e-12));

    const IqSamples flip = dqpsk_encode(std::vector<std::uint8_t>{1, 1});
    CHECK(flip[0].real() == doctest::Approx(-1.0).epsilon(1e-12));

    // 01 then 10: +90 then +270, back to the reference phase.
    const IqSamples pair = dqpsk_encode(std::vector<std::uint8_t>{0, 1, 1, 0});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pair[0].imag() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pair[1].real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pair[1].imag() == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(dqpsk_encode({}).empty());
}

TEST_CASE("per-symbol phase difference equals the table entry") {
    std::mt19937_64 gen(21);
    const BitStream bits = random_even_bits(500, gen);
    const IqSamples syms = dqpsk_encode(bits, 30.0);
    Complex prev = std::polar(1.0, deg2rad(30.0));
    for (std::size_t i = 0; i < syms.size(); ++i) {
        CHECK(std::abs(syms[i]) == doctest::Approx(1.0).epsilon(1e-12));
        double diff = std::arg(syms[i] * std::conj(prev)) * 180.0 / std::numbers::pi;
        if (diff < 0) diff += 360.0;
        const unsigned dibit = static_cast<unsigned>((bits[2 * i] << 1) | bits[2 * i + 1]);
        const double want = dqpsk_shift_degrees(dibit);
        CHECK(std::abs(std::remainder(diff - want, 360.0)) < 1e-9);
        prev = syms[i];
    }
}

TEST_CASE("decode inverts encode") {
    std::mt19937_64 gen(42);
    std::uniform_int_distribution<std::size_t> len(0, 40);
    std::uniform_real_distribution<double> ref(-180.0, 180.0);
    for (int trial = 0; trial < 2000; ++trial) {
        const BitStream tx = random_even_bits(len(gen), gen);
        const double phase = ref(gen);
        CHECK(dqpsk_decode(dqpsk_encode(tx, phase), phase) == tx);
    }
}

TEST_CASE("common rotation of burst and reference is transparent") {
    std::mt19937_64 gen(43);
    std::uniform_real_distribution<double> any(-360.0, 360.0);
    for (int trial = 0; trial < 200; ++trial) {
        const BitStream tx = random_even_bits(24, gen);
        const IqSamples syms = dqpsk_encode(tx, 0.0);
        const double r = any(gen);
        CHECK(dqpsk_decode(rotate(syms, r), r) == tx);
    }
}

TEST_CASE("quadrant rotation of the burst alone only touches the first dibit") {
    std::mt19937_64 gen(44);
    for (int trial = 0; trial < 1000; ++trial) {
        const BitStream tx = random_even_bits(16, gen);
        const IqSamples syms = dqpsk_encode(tx, 0.0);
        for (int rot : {90, 180, 270}) {
            const BitStream rx = dqpsk_decode(rotate(syms, rot), 0.0);
            REQUIRE(rx.size() == tx.size());
            // Everything after the first dibit survives untouched.
            for (std::size_t i = 2; i < tx.size(); ++i) {
                CHECK(rx[i] == tx[i]);
            }
            // The first dibit absorbs the rotation.
            const unsigned first = static_cast<unsigned>((tx[0] << 1) | tx[1]);
            const unsigned got = static_cast<unsigned>((rx[0] << 1) | rx[1]);
            CHECK(got == dqpsk_dibit_for_shift(
                             (dqpsk_shift_degrees(first) + rot) % 360));
        }
    }
}

TEST_CASE("decode quantizes to the nearest shift") {
    // Boundaries sit at odd multiples of 45 degrees.
    auto one = [](double deg) {
        return dqpsk_decode(std::vector<Complex>{std::polar(1.0, deg2rad(deg))}, 0.0);
    };
    CHECK(one(44.9) == BitStream{0, 0});
    CHECK(one(45.1) == BitStream{0, 1});
    CHECK(one(134.9) == BitStream{0, 1});
    CHECK(one(135.1) == BitStream{1, 1});
    CHECK(one(224.9) == BitStream{1, 1});
    CHECK(one(225.1) == BitStream{1, 0});
    CHECK(one(314.9) == BitStream{1, 0});
    CHECK(one(315.1) == BitStream{0, 0});
    // Magnitude does not matter, only phase.
    CHECK(dqpsk_decode(std::vector<Complex>{Complex(0.0, 3.0)}, 0.0) == BitStream{0, 1});
}

TEST_CASE("length and sample validation") {
    CHECK_THROWS_AS((void)dqpsk_encode(std::vector<std::uint8_t>{1}), LengthError);
    CHECK_THROWS_AS((void)dqpsk_encode(std::vector<std::uint8_t>{1, 0, 1}), LengthError);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((void)dqpsk_decode(std::vector<Complex>{Complex(nan, 0.0)}, 0.0),
                    InvalidSampleError);
    CHECK_THROWS_AS((void)dqpsk_decode(std::vector<Complex>{Complex(0.0, 0.0)}, 0.0),
                    InvalidSampleError);
    CHECK(dqpsk_decode({}, 0.0).empty());
}
