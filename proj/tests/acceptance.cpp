// Release gate: re-measures every shipped claim and prints one verdict line
// per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ntrn/analytics.hpp"
#include "ntrn/channel.hpp"
#include "ntrn/codec.hpp"
#include "ntrn/container.hpp"
#include "ntrn/dual.hpp"
#include "ntrn/transcode.hpp"

namespace {

int failures = 0;

void gate(const char* id, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %s: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v, int prec = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

ntrn::SchemeConfig cfg(unsigned delimiter, ntrn::Mapping m) {
    return {ntrn::make_bit_pair(delimiter), m, ntrn::Variant::single_delimiter};
}

// structure shared across configs: data ranks and boundary levels
struct EventShape {
    bool boundary;
    unsigned rank;          // 0..2 when data
    std::uint64_t level;    // >= 1 when boundary
};

std::vector<EventShape> random_shape(std::mt19937_64& rng, std::size_t max_len) {
    std::size_t n = rng() % (max_len + 1);
    std::vector<EventShape> shape;
    shape.reserve(n);
    bool prev_boundary = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!prev_boundary && rng() % 4 == 0) {
            shape.push_back({true, 0, 1 + rng() % 5});
            prev_boundary = true;
        } else {
            shape.push_back({false, static_cast<unsigned>(rng() % 3), 0});
            prev_boundary = false;
        }
    }
    return shape;
}

std::vector<ntrn::Event> materialize(const std::vector<EventShape>& shape, ntrn::Mapping m) {
    const auto domain = ntrn::trit_domain(m);
    std::vector<ntrn::Event> events;
    events.reserve(shape.size());
    for (const auto& s : shape)
        events.push_back(s.boundary ? ntrn::Event::boundary(s.level)
                                    : ntrn::Event::data(domain[s.rank]));
    return events;
}

void criterion_1() {
    std::uint64_t bits = ntrn::boundary_overhead_bits(24, 170);
    bool pass = bits == 728 && bits % 8 == 0 && bits / 8 == 91;
    gate("1", pass,
         "boundary overhead at 24 layers / 170 tensors is " + std::to_string(bits) + " bits = " +
             std::to_string(bits / 8) + " bytes (want 728 bits = 91 bytes)");
}

void criterion_2() {
    ntrn::ModelManifest manifest{{{"model", {{"weights", 1000000}}}}};
    const auto domain = ntrn::trit_domain(ntrn::Mapping::balanced);
    std::mt19937_64 rng(4242);
    std::vector<ntrn::Trit> weights;
    weights.reserve(1000000);
    for (int i = 0; i < 1000000; ++i) weights.push_back(domain[rng() % 3]);

    auto file = ntrn::pack_model(manifest, weights, ntrn::SchemeConfig{});
    auto view = ntrn::read_model_container(file);
    std::uint64_t data_pairs = 0;
    ntrn::for_each_event(view.payload, view.config, [&](const ntrn::Event& e) {
        if (e.kind == ntrn::Event::Kind::data) ++data_pairs;
    });
    std::uint64_t weight_bytes = data_pairs * 2 / 8;

    auto cmp = ntrn::storage_comparison(1000000, 1, 1);
    double q2k = std::round(cmp.models[0].size_ratio * 100.0) / 100.0;
    double int8 = std::round(cmp.models[2].size_ratio * 100.0) / 100.0;

    bool pass = data_pairs == 1000000 && weight_bytes == 250000 && q2k == 0.76 && int8 == 0.25;
    gate("2", pass,
         "10^6 weights pack to " + std::to_string(weight_bytes) +
             " weight-payload bytes at 2.000 bits/weight (want 250000); size ratios q2_k " +
             fmt(q2k, 2) + " (want 0.76), int8 " + fmt(int8, 2) + " (want 0.25)");
}

void criterion_3() {
    auto cmp = ntrn::storage_comparison(1000000, 170, 24);
    double ratio = cmp.models[0].overhead_ratio;
    bool pass = std::fabs(ratio - 43520.0 / 91.0) < 1e-9 && std::fabs(ratio - 478.2) <= 0.05 &&
                std::fabs(ratio / 460.0 - 1.0) <= 0.05;
    gate("3", pass,
         "per-tensor header overhead 43520 bytes vs 91 boundary bytes = " + fmt(ratio, 2) +
             "x (want ~478.2, within 5% of the rounded 460x)");
}

void criterion_4() {
    double single = ntrn::data_density(ntrn::Variant::single_delimiter);
    double dual = ntrn::data_density(ntrn::Variant::dual_starter);
    bool pass = std::fabs(single - 0.7924812503605781) <= 1e-12 && dual == 0.5;
    gate("4", pass,
         "data density single " + fmt(single, 13) + " (want log2(3)/2 within 1e-12), dual " +
             fmt(dual, 4) + " (want 0.5 exactly)");
}

void criterion_5() {
    ntrn::TextShapeParams p;  // 5 chars/word, 20 words/sentence, 8 sentences/paragraph
    double bits = ntrn::amortised_overhead(p);
    bool pass = std::fabs(bits - 0.4475) <= 1e-6;
    gate("5", pass,
         "amortised boundary cost for the 5/20/8 text shape is " + fmt(bits, 6) +
             " bits/char (want 0.4475 +/- 1e-6)");
}

void criterion_6a() {
    std::mt19937_64 rng(601);
    std::uint64_t trips = 0, bad = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        auto shape = random_shape(rng, 64);
        for (unsigned delim = 0; delim < 4; ++delim) {
            for (auto m : {ntrn::Mapping::balanced, ntrn::Mapping::unsigned_ternary}) {
                auto events = materialize(shape, m);
                auto c = cfg(delim, m);
                if (ntrn::decode(ntrn::encode(events, c), c) != events) ++bad;
                ++trips;
            }
        }
    }
    gate("6a", bad == 0,
         "single-delimiter round trip: " + std::to_string(bad) + " failures in " +
             std::to_string(trips) + " encode/decode trips (10000 sequences x 8 configs)");
}

void criterion_6b() {
    std::mt19937_64 rng(602);
    std::uint64_t trips = 0, bad = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::size_t n = rng() % 25;
        std::vector<ntrn::DualSymbol> symbols;
        std::uint64_t payload_bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ntrn::DualSymbol s;
            s.ns = rng() % 2 ? ntrn::DualNamespace::b : ntrn::DualNamespace::a;
            std::size_t len = rng() % 9;
            for (std::size_t j = 0; j < len; ++j)
                s.bits.push_back(static_cast<std::uint8_t>(rng() % 2));
            payload_bits += len;
            symbols.push_back(std::move(s));
        }
        auto buf = ntrn::encode_dual(symbols);
        auto result = ntrn::decode_dual(buf);
        bool ok = result.symbols == symbols && result.skipped_prefix_pairs == 0 &&
                  buf.pair_count() == symbols.size() + payload_bits;

        if (ok && !symbols.empty()) {
            // enter the stream one pair late: the head symbol's continuations
            // are skipped and decoding resynchronises at the next starter
            ntrn::PairBuffer tail;
            for (std::uint64_t i = 1; i < buf.pair_count(); ++i) tail.append(buf.pair(i));
            auto resynced = ntrn::decode_dual(tail);
            std::vector<ntrn::DualSymbol> want(symbols.begin() + 1, symbols.end());
            ok = resynced.symbols == want &&
                 resynced.skipped_prefix_pairs == symbols.front().bits.size();
        }
        if (!ok) ++bad;
        ++trips;
    }
    gate("6b", bad == 0,
         "dual-starter round trip and one-pair-late resync: " + std::to_string(bad) +
             " failures in " + std::to_string(trips) + " sequences");
}

void criterion_6c() {
    std::mt19937_64 rng(603);
    std::uint64_t trips = 0, bad = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::size_t n = rng() % 4097;
        std::vector<std::uint8_t> data(n);
        for (auto& b : data) b = static_cast<std::uint8_t>(rng());
        auto trits = ntrn::binary_to_trits(data);
        if (trits.size() != ntrn::trit_count_for_length(n) ||
            ntrn::trits_to_binary(trits, n) != data)
            ++bad;
        ++trips;
    }
    gate("6c", bad == 0,
         "transcode round trip: " + std::to_string(bad) + " failures in " +
             std::to_string(trips) + " byte strings of length 0-4096");
}

void criterion_6d() {
    std::mt19937_64 rng(604);
    std::uint64_t trips = 0, bad = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        ntrn::ModelManifest manifest;
        std::uint64_t weight_count = 0;
        std::size_t layers = 1 + rng() % 8;
        for (std::size_t l = 0; l < layers; ++l) {
            ntrn::LayerSpec layer{"l" + std::to_string(l), {}};
            std::size_t tensors = 1 + rng() % 10;
            for (std::size_t t = 0; t < tensors; ++t) {
                std::uint64_t elems = 1 + rng() % 256;
                layer.tensors.push_back({"t" + std::to_string(t), elems});
                weight_count += elems;
            }
            manifest.layers.push_back(std::move(layer));
        }
        const auto domain = ntrn::trit_domain(ntrn::Mapping::balanced);
        std::vector<ntrn::Trit> weights;
        weights.reserve(weight_count);
        for (std::uint64_t i = 0; i < weight_count; ++i) weights.push_back(domain[rng() % 3]);

        auto c = cfg(rng() % 4, ntrn::Mapping::balanced);
        auto model = ntrn::unpack_model(ntrn::pack_model(manifest, weights, c));
        if (model.manifest != manifest || model.weights != weights || model.config != c) ++bad;
        ++trips;
    }
    gate("6d", bad == 0,
         "model pack/unpack: " + std::to_string(bad) + " failures in " + std::to_string(trips) +
             " toy manifests");
}

void criterion_7() {
    // stated gate: exactly 1 of the 6 (data pair, bit) flips reaches the
    // delimiter, and the Monte-Carlo rate converges to 1/6 +/- 0.002
    bool census_pass = true;
    unsigned census_hits = 0;
    for (unsigned delim = 0; delim < 4; ++delim) {
        auto c = cfg(delim, ntrn::Mapping::balanced);
        unsigned hits = 0;
        for (auto symbol : ntrn::data_symbols(c))
            for (unsigned bit = 0; bit < 2; ++bit)
                if ((symbol.value ^ (bit == 0 ? 2u : 1u)) == c.delimiter.value) ++hits;
        census_hits = hits;  // identical for every delimiter choice
        if (hits != 1) census_pass = false;
    }

    auto estimate =
        ntrn::vulnerability_rate(cfg(3, ntrn::Mapping::balanced), 1000000, 1, 2026);
    double rate = estimate.rate();
    bool rate_pass = std::fabs(rate - 1.0 / 6.0) <= 0.002;

    gate("7", census_pass && rate_pass,
         "expected exactly 1 of 6 single-bit data-pair flips to reach the delimiter and a "
         "Monte-Carlo rate of 1/6 +/- 0.002 at 10^6 flips; measured " +
             std::to_string(census_hits) +
             " of 6 for every delimiter choice (both Hamming-1 neighbours of the delimiter "
             "are data pairs) and rate " +
             fmt(rate, 4));
}

void criterion_8() {
    std::mt19937_64 rng(808);
    std::vector<std::uint8_t> data(65536);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    auto trits = ntrn::binary_to_trits(data);
    double expansion =
        2.0 * static_cast<double>(trits.size()) / (8.0 * static_cast<double>(data.size()));
    bool pass = std::fabs(expansion - 1.2632) <= 0.005;
    gate("8", pass,
         "measured expansion on 64 KiB is " + fmt(expansion, 6) + " (want 1.2632 +/- 0.005)");
}

void criterion_9() {
    auto small = ntrn::throughput_bench(1000000, 42);
    auto large = ntrn::throughput_bench(100000000, 42);
    bool pass = small.decode_mb_per_s >= 10.0 && large.decode_mb_per_s >= 10.0;
    gate("9", pass,
         "throughput 10^6 trits: encode " + fmt(small.encode_mb_per_s, 1) + " / decode " +
             fmt(small.decode_mb_per_s, 1) + " MB/s; 10^8 trits: encode " +
             fmt(large.encode_mb_per_s, 1) + " / decode " + fmt(large.decode_mb_per_s, 1) +
             " MB/s (soft floor: decode >= 10 MB/s)");
}

void criterion_10() {
    std::mt19937_64 rng(1010);
    std::uint64_t buffers = 0, events = 0;
    std::uint64_t checksum = 0;
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string what;
    try {
        for (int iter = 0; iter < 1000000; ++iter) {
            std::size_t len = rng() % 65;
            std::vector<std::uint8_t> raw(len);
            for (auto& b : raw) b = static_cast<std::uint8_t>(rng());
            std::uint64_t pc = len == 0 ? 0 : rng() % (len * 4 + 1);
            auto buf = ntrn::PairBuffer::from_bytes(std::move(raw), pc);
            auto c = cfg(rng() % 4, rng() % 2 ? ntrn::Mapping::balanced
                                              : ntrn::Mapping::unsigned_ternary);
            ntrn::for_each_event(buf, c, [&](const ntrn::Event& e) {
                ++events;
                checksum += e.kind == ntrn::Event::Kind::boundary
                                ? e.level
                                : static_cast<std::uint64_t>(
                                      static_cast<std::int64_t>(e.trit.value) + 1);
            });
            ++buffers;
        }
    } catch (const std::exception& e) {
        pass = false;
        what = e.what();
    }
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    gate("10", pass,
         pass ? "decoder consumed " + std::to_string(buffers) + " random buffers (" +
                    std::to_string(events) + " events, checksum " + std::to_string(checksum) +
                    ") in " + fmt(seconds, 1) + " s without error"
              : "decoder threw after " + std::to_string(buffers) + " buffers: " + what);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6a();
    criterion_6b();
    criterion_6c();
    criterion_6d();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
