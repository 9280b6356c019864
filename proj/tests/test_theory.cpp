#include <doctest.h>

#include "theory.hpp"

// Pins the C++ reference curves to values computed by an independent
// erfc/Monte-Carlo script. If any of these move, the oracle itself broke.

TEST_CASE("q function reference points") {
    CHECK(theory::q_func(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(theory::q_func(std::sqrt(2.0)) ==
          doctest::Approx(0.078649603525142567).epsilon(1e-12));
    CHECK(theory::q_func(3.0) == doctest::Approx(0.0013498980316300933).epsilon(1e-10));
}

TEST_CASE("bpsk/qpsk frozen curve") {
    CHECK(theory::ber_bpsk_qpsk(0.0) == doctest::Approx(0.07864960352514257).epsilon(1e-10));
    CHECK(theory::ber_bpsk_qpsk(2.0) == doctest::Approx(0.037506128358926666).epsilon(1e-10));
    CHECK(theory::ber_bpsk_qpsk(4.0) == doctest::Approx(0.012500818040738056).epsilon(1e-10));
    CHECK(theory::ber_bpsk_qpsk(6.0) == doctest::Approx(0.002388290780933).epsilon(1e-9));
}

TEST_CASE("16-qam frozen curve (Eb/N0)") {
    CHECK(theory::ber_qam16_ebn0(0.0) == doctest::Approx(0.14098164).epsilon(1e-6));
    CHECK(theory::ber_qam16_ebn0(2.0) == doctest::Approx(0.097741854).epsilon(1e-6));
    CHECK(theory::ber_qam16_ebn0(4.0) == doctest::Approx(0.058623737).epsilon(1e-6));
    CHECK(theory::ber_qam16_ebn0(6.0) == doctest::Approx(0.027871328).epsilon(1e-6));
}

TEST_CASE("64-qam frozen curve (Es/N0)") {
    CHECK(theory::ber_qam64_esn0(-2.0) == doctest::Approx(0.39014374).epsilon(1e-6));
    CHECK(theory::ber_qam64_esn0(10.0) == doctest::Approx(0.15254643).epsilon(1e-6));
    CHECK(theory::ber_qam64_esn0(18.0) == doctest::Approx(0.024217303).epsilon(1e-6));
    CHECK(theory::ber_qam64_esn0(22.5) == doctest::Approx(0.0010542268).epsilon(1e-6));
}

TEST_CASE("curves decrease with snr") {
    for (double db = -2.0; db < 14.0; db += 0.5) {
        CHECK(theory::ber_bpsk_qpsk(db + 0.5) < theory::ber_bpsk_qpsk(db));
        CHECK(theory::ber_qam16_esn0(db + 0.5) < theory::ber_qam16_esn0(db));
        CHECK(theory::ber_qam64_esn0(db + 0.5) < theory::ber_qam64_esn0(db));
    }
}

TEST_CASE("higher order pays more at equal Es/N0") {
    for (double db = 2.0; db <= 20.0; db += 2.0) {
        const double bpsk = theory::ber_bpsk_qpsk(db);
        const double qpsk = theory::ber_bpsk_qpsk(sdrlink::esn0_to_ebn0_db(db, 2));
        const double qam16 = theory::ber_qam16_esn0(db);
        const double qam64 = theory::ber_qam64_esn0(db);
        CHECK(bpsk < qpsk);
        CHECK(qpsk < qam16);
        CHECK(qam16 < qam64);
    }
}
