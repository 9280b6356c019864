#include "sdrlink/montecarlo.hpp"

#include <future>
#include <vector>

#include "sdrlink/channel.hpp"
#include "sdrlink/rng.hpp"

namespace sdrlink {

namespace {

// 32768 symbols per chunk: chunk boundaries land on whole 64-bit words of
// the bit stream for every bits-per-symbol value.
constexpr std::uint64_t kChunkSymbols = 1u << 15;

struct PointStreams {
    rng::Stream bits;
    ChannelConfig channel;
};

std::uint64_t run_chunk(const Constellation& c, const PointStreams& streams,
                        std::uint64_t first_symbol, std::uint64_t n_symbols) {
    const auto k = static_cast<std::uint64_t>(c.bits_per_symbol());
    BitStream tx_bits(static_cast<std::size_t>(n_symbols * k));
    rng::fill_bits(streams.bits, first_symbol * k, tx_bits);
    const IqSamples tx = c.map_bits(tx_bits);
    const IqSamples rx = apply_awgn(tx, streams.channel, first_symbol);
    const BitStream rx_bits = c.demap_hard(rx);
    std::uint64_t errors = 0;
    for (std::size_t i = 0; i < tx_bits.size(); ++i) {
        errors += tx_bits[i] != rx_bits[i];
    }
    return errors;
}

} // namespace

BerMeasurement measure_ber(const Constellation& c, double es_n0_db, std::uint64_t n_bits,
                           std::uint64_t seed, std::uint64_t point_tag, unsigned threads) {
    const auto k = static_cast<std::uint64_t>(c.bits_per_symbol());
    const std::uint64_t n_symbols = n_bits / k;

    PointStreams streams;
    streams.bits = rng::make_stream(seed, rng::kTagPayloadBits, point_tag);
    streams.channel.es_n0_db = es_n0_db;
    streams.channel.seed = rng::make_stream(seed, rng::kTagPointSeed, point_tag).key;

    BerMeasurement m;
    m.bits_sent = n_symbols * k;

    const std::uint64_t n_chunks = (n_symbols + kChunkSymbols - 1) / kChunkSymbols;
    if (threads <= 1 || n_chunks <= 1) {
        for (std::uint64_t chunk = 0; chunk < n_chunks; ++chunk) {
            const std::uint64_t first = chunk * kChunkSymbols;
            m.bit_errors += run_chunk(c, streams, first, std::min(kChunkSymbols, n_symbols - first));
        }
        return m;
    }

    // Integer error counts sum identically in any order, so striping chunks
    // across workers cannot change the result.
    const unsigned n_workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));
    std::vector<std::future<std::uint64_t>> workers;
    workers.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w]() {
            std::uint64_t errors = 0;
            for (std::uint64_t chunk = w; chunk < n_chunks; chunk += n_workers) {
                const std::uint64_t first = chunk * kChunkSymbols;
                errors += run_chunk(c, streams, first, std::min(kChunkSymbols, n_symbols - first));
            }
            return errors;
        }));
    }
    for (auto& f : workers) {
        m.bit_errors += f.get();
    }
    return m;
}

} // namespace sdrlink
