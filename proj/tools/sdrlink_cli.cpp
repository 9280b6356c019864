// Link-simulation CLI: BER sweeps, adaptive-modulation range walks,
// switching-policy derivation, and passband waveform synthesis.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdrlink/constellation.hpp"
#include "sdrlink/dqpsk.hpp"
#include "sdrlink/errors.hpp"
#include "sdrlink/io.hpp"
#include "sdrlink/rng.hpp"
#include "sdrlink/simulate.hpp"
#include "sdrlink/waveform.hpp"

namespace {

using namespace sdrlink;

std::vector<double> build_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw ConfigError("step must be positive");
    if (stop < start) throw ConfigError("stop must not precede start");
    std::vector<double> points;
    const int n = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) points.push_back(start + step * i);
    return points;
}

Scheme parse_scheme(const std::string& name) {
    const auto s = scheme_from_name(name);
    if (!s) throw ConfigError("unknown scheme: " + name);
    return *s;
}

BitStream read_bits_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open bits file " + path);
    BitStream bits;
    char ch;
    while (in.get(ch)) {
        if (ch == '0' || ch == '1') {
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw ConfigError(std::string("bits file may only contain 0, 1 and whitespace; saw '") +
                              ch + "'");
        }
    }
    return bits;
}

BitStream random_payload(std::uint64_t n, std::uint64_t seed) {
    BitStream bits(n);
    rng::fill_bits(rng::make_stream(seed, rng::kTagPayloadBits), 0, bits);
    return bits;
}

void write_reports(const std::vector<LinkReport>& reports, const std::string& out_path) {
    if (out_path.empty()) {
        emit_csv(reports, std::cout);
    } else {
        emit_csv(reports, std::filesystem::path(out_path));
    }
}

struct BerSweepArgs {
    std::string scheme;
    double start = 0.0;
    double stop = 10.0;
    double step = 1.0;
    std::uint64_t bits = 1'200'000;
    std::uint64_t seed = 1;
    double symbol_rate = 1e6;
    unsigned threads = 1;
    std::string out;
};

struct RangeSimArgs {
    double dmin = 1.0;
    double dmax = 100.0;
    int points = 25;
    double exponent = 2.0;
    double snr0 = 26.0;
    double d0 = 1.0;
    double target_ber = 1e-3;
    double hysteresis = 0.0;
    double symbol_rate = 1e6;
    std::uint64_t bits = 240'000;
    std::uint64_t budget = 400'000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string policy_path;
    std::string out;
};

struct DerivePolicyArgs {
    double target_ber = 1e-3;
    std::uint64_t budget = 400'000;
    std::uint64_t seed = 1;
    double hysteresis = 0.0;
    unsigned threads = 1;
    std::string out;
};

struct SynthArgs {
    std::string scheme;
    std::string bits_file;
    std::uint64_t random_bits = 0;
    double carrier = 2'000.0;
    double sample_rate = 48'000.0;
    int sps = 48;
    double f0 = 1'000.0;
    double f1 = 2'000.0;
    double a0 = 0.5;
    double a1 = 1.0;
    std::uint64_t seed = 1;
    std::string out;
};

void run_ber_sweep_cmd(const BerSweepArgs& a) {
    SweepSpec spec;
    spec.scheme = parse_scheme(a.scheme);
    spec.ebn0_db_points = build_grid(a.start, a.stop, a.step);
    spec.bits_per_point = a.bits;
    spec.seed = a.seed;
    spec.symbol_rate_hz = a.symbol_rate;
    spec.threads = a.threads;
    write_reports(run_ber_sweep(spec), a.out);
}

void run_range_sim_cmd(const RangeSimArgs& a, bool explicit_target, bool explicit_hyst) {
    RangeSimSpec spec;
    spec.distances_m = log_spaced_distances(a.dmin, a.dmax, a.points);
    spec.path_loss = PathLossModel{a.snr0, a.d0, a.exponent};
    if (!a.policy_path.empty()) {
        spec.policy = load_policy(a.policy_path);
        // Explicit flags win over the file's own values.
        if (explicit_target) spec.policy.target_ber = a.target_ber;
        if (explicit_hyst) spec.policy.hysteresis_db = a.hysteresis;
    } else {
        spec.policy = derive_thresholds(a.target_ber, all_schemes(), a.budget, a.seed,
                                        ThresholdGrid{}, a.threads);
        spec.policy.hysteresis_db = a.hysteresis;
    }
    spec.bits_per_point = a.bits;
    spec.seed = a.seed;
    spec.symbol_rate_hz = a.symbol_rate;
    spec.threads = a.threads;
    write_reports(run_range_sim(spec), a.out);
}

void run_derive_policy_cmd(const DerivePolicyArgs& a) {
    AmcPolicy policy = derive_thresholds(a.target_ber, all_schemes(), a.budget, a.seed,
                                         ThresholdGrid{}, a.threads);
    policy.hysteresis_db = a.hysteresis;
    if (a.out.empty()) {
        std::cout << format_policy(policy);
    } else {
        write_policy(policy, a.out);
    }
}

void run_synth_cmd(const SynthArgs& a) {
    if (a.bits_file.empty() == (a.random_bits == 0)) {
        throw ConfigError("pass exactly one of --bits-file or --random-bits");
    }
    const BitStream bits =
        a.bits_file.empty() ? random_payload(a.random_bits, a.seed) : read_bits_file(a.bits_file);
    if (bits.empty()) throw ConfigError("no bits to modulate");

    PassbandParams p;
    p.carrier_frequency_hz = a.carrier;
    p.sample_rate_hz = a.sample_rate;
    p.samples_per_symbol = a.sps;
    p.fsk_f0_hz = a.f0;
    p.fsk_f1_hz = a.f1;
    p.ask_a0 = a.a0;
    p.ask_a1 = a.a1;

    RealSamples wave;
    if (a.scheme == "ask") {
        wave = synth_ask(bits, p);
    } else if (a.scheme == "fsk") {
        wave = synth_fsk(bits, p);
    } else if (a.scheme == "dqpsk") {
        wave = synth_psk_qam(dqpsk_encode(bits), p);
    } else {
        const Constellation c(parse_scheme(a.scheme));
        wave = synth_psk_qam(c.map_bits(bits), p);
    }
    export_iq(wave, std::filesystem::path(a.out));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sdrlink: baseband modem and adaptive-modulation link simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "sdrlink 0.1.0");
    app.set_config("--config", "",
                   "read option defaults from an INI file with [subcommand] sections");

    BerSweepArgs sweep;
    CLI::App* sweep_cmd =
        app.add_subcommand("ber-sweep", "Monte-Carlo BER sweep for one scheme (CSV output)");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--scheme", sweep.scheme, "bpsk, qpsk, qam16 or qam64")->required();
    sweep_cmd->add_option("--ebn0-start", sweep.start, "first Eb/N0 point, dB");
    sweep_cmd->add_option("--ebn0-stop", sweep.stop, "last Eb/N0 point, dB");
    sweep_cmd->add_option("--ebn0-step", sweep.step, "Eb/N0 grid step, dB");
    sweep_cmd->add_option("--bits", sweep.bits, "bits simulated per point");
    sweep_cmd->add_option("--seed", sweep.seed, "random stream seed");
    sweep_cmd->add_option("--symbol-rate", sweep.symbol_rate, "symbol rate for goodput, Hz");
    sweep_cmd->add_option("--threads", sweep.threads, "worker threads (results identical)");
    sweep_cmd->add_option("--out", sweep.out, "output CSV path (default stdout)");

    RangeSimArgs range;
    CLI::App* range_cmd = app.add_subcommand(
        "range-sim", "Adaptive-modulation link walk over a distance sweep (CSV output)");
    range_cmd->fallthrough();
    range_cmd->add_option("--dmin", range.dmin, "nearest distance, m");
    range_cmd->add_option("--dmax", range.dmax, "farthest distance, m");
    range_cmd->add_option("--points", range.points, "log-spaced distance count");
    range_cmd->add_option("--exponent", range.exponent, "path-loss exponent");
    range_cmd->add_option("--snr0", range.snr0, "Es/N0 at the reference distance, dB");
    range_cmd->add_option("--d0", range.d0, "reference distance, m");
    auto* opt_target = range_cmd->add_option("--target-ber", range.target_ber,
                                             "BER ceiling for scheme selection");
    auto* opt_hyst = range_cmd->add_option("--hysteresis", range.hysteresis,
                                           "extra dB required before upgrading");
    range_cmd->add_option("--symbol-rate", range.symbol_rate, "symbol rate, Hz");
    range_cmd->add_option("--bits", range.bits, "bits simulated per distance");
    range_cmd->add_option("--budget", range.budget, "bits per point for threshold derivation");
    range_cmd->add_option("--seed", range.seed, "random stream seed");
    range_cmd->add_option("--threads", range.threads, "worker threads (results identical)");
    range_cmd->add_option("--policy", range.policy_path,
                          "use thresholds from this policy file instead of deriving");
    range_cmd->add_option("--out", range.out, "output CSV path (default stdout)");

    DerivePolicyArgs derive;
    CLI::App* derive_cmd = app.add_subcommand(
        "derive-policy", "Derive switching thresholds by Monte-Carlo search");
    derive_cmd->fallthrough();
    derive_cmd->add_option("--target-ber", derive.target_ber, "BER ceiling per scheme");
    derive_cmd->add_option("--budget", derive.budget, "bits simulated per grid point");
    derive_cmd->add_option("--seed", derive.seed, "random stream seed");
    derive_cmd->add_option("--hysteresis", derive.hysteresis,
                           "hysteresis recorded in the policy, dB");
    derive_cmd->add_option("--threads", derive.threads, "worker threads (results identical)");
    derive_cmd->add_option("--out", derive.out, "policy file path (default stdout)");

    SynthArgs synth;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Synthesize a passband burst into an IQF1 capture");
    synth_cmd->fallthrough();
    synth_cmd->add_option("--scheme", synth.scheme,
                          "ask, fsk, bpsk, qpsk, dqpsk, qam16 or qam64")
        ->required();
    synth_cmd->add_option("--bits-file", synth.bits_file, "ASCII 0/1 payload file");
    synth_cmd->add_option("--random-bits", synth.random_bits, "generate this many random bits");
    synth_cmd->add_option("--carrier", synth.carrier, "carrier frequency, Hz");
    synth_cmd->add_option("--sample-rate", synth.sample_rate, "output sample rate, Hz");
    synth_cmd->add_option("--sps", synth.sps, "samples per symbol");
    synth_cmd->add_option("--f0", synth.f0, "FSK tone for bit 0, Hz");
    synth_cmd->add_option("--f1", synth.f1, "FSK tone for bit 1, Hz");
    synth_cmd->add_option("--a0", synth.a0, "ASK amplitude for bit 0");
    synth_cmd->add_option("--a1", synth.a1, "ASK amplitude for bit 1");
    synth_cmd->add_option("--seed", synth.seed, "seed for --random-bits");
    synth_cmd->add_option("--out", synth.out, "output IQ capture path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep_cmd->parsed()) {
            run_ber_sweep_cmd(sweep);
        } else if (range_cmd->parsed()) {
            run_range_sim_cmd(range, opt_target->count() > 0, opt_hyst->count() > 0);
        } else if (derive_cmd->parsed()) {
            run_derive_policy_cmd(derive);
        } else if (synth_cmd->parsed()) {
            run_synth_cmd(synth);
        }
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
