#include "ntrn/analytics.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <random>

#include "ntrn/codec.hpp"
#include "ntrn/container.hpp"
#include "ntrn/errors.hpp"

namespace ntrn {

double data_density(Variant variant) {
    return variant == Variant::single_delimiter ? std::log2(3.0) / 2.0 : 0.5;
}

double amortised_overhead(const TextShapeParams& p) {
    if (!(p.chars_per_word > 0) || !(p.words_per_sentence > 0) || !(p.sentences_per_paragraph > 0))
        throw ArgumentError("text shape parameters must be positive");
    if (p.word_level < 1 || p.word_level >= p.sentence_level || p.sentence_level >= p.paragraph_level)
        throw ArgumentError("boundary levels must satisfy 1 <= word < sentence < paragraph");
    double per_word = 2.0 * p.word_level / p.chars_per_word;
    double per_sentence = 2.0 * p.sentence_level / (p.chars_per_word * p.words_per_sentence);
    double per_paragraph =
        2.0 * p.paragraph_level / (p.chars_per_word * p.words_per_sentence * p.sentences_per_paragraph);
    return per_word + per_sentence + per_paragraph;
}

std::span<const StorageModel> default_storage_models() {
    static const StorageModel models[] = {
        {"q2_k", 2.625, 256.0},
        {"q4_0", 4.5, 256.0},
        {"int8", 8.0, 256.0},
    };
    return models;
}

StorageComparison storage_comparison(std::uint64_t weight_count, std::uint64_t tensor_count,
                                     std::uint64_t layer_count,
                                     std::span<const StorageModel> models) {
    StorageComparison cmp;
    cmp.native.name = "native_ternary";
    cmp.native.bits_per_weight = 2.0;
    cmp.native.payload_bytes = static_cast<double>(weight_count) * 2.0 / 8.0;
    cmp.native.overhead_bytes =
        static_cast<double>(boundary_overhead_bits(layer_count, tensor_count)) / 8.0;
    cmp.native.total_bytes = cmp.native.payload_bytes + cmp.native.overhead_bytes;

    for (const StorageModel& m : models) {
        StorageRow row;
        row.name = m.name;
        row.bits_per_weight = m.bits_per_weight;
        row.payload_bytes = static_cast<double>(weight_count) * m.bits_per_weight / 8.0;
        row.overhead_bytes = static_cast<double>(tensor_count) * m.per_tensor_header_bytes;
        row.total_bytes = row.payload_bytes + row.overhead_bytes;
        row.size_ratio = row.total_bytes > 0 ? cmp.native.total_bytes / row.total_bytes : 1.0;
        row.overhead_ratio = cmp.native.overhead_bytes > 0
                                 ? row.overhead_bytes / cmp.native.overhead_bytes
                                 : std::numeric_limits<double>::quiet_NaN();
        cmp.models.push_back(std::move(row));
    }
    return cmp;
}

ThroughputReport throughput_bench(std::uint64_t scale, std::uint64_t seed) {
    if (scale < 1) throw ArgumentError("bench scale must be >= 1");
    const SchemeConfig config{};  // delimiter 11, balanced, single
    const auto domain = trit_domain(config.mapping);

    std::vector<Trit> trits(scale);
    std::mt19937_64 rng(seed);
    for (auto& t : trits) t = domain[rng() % 3];

    using clock = std::chrono::steady_clock;
    auto encode_once = [&] {
        PairBuffer buffer;
        buffer.reserve_pairs(scale);
        append_data_run(buffer, trits, config);
        return buffer;
    };

    PairBuffer buffer = encode_once();  // warm-up, also the decode input
    std::uint64_t checksum = 0;
    auto decode_once = [&] {
        std::uint64_t acc = 0;
        for_each_event(buffer, config, [&](const Event& e) {
            acc += (e.kind == Event::Kind::data)
                       ? static_cast<std::uint64_t>(static_cast<std::int64_t>(e.trit.value) + 1)
                       : e.level << 2;
        });
        return acc;
    };
    checksum = decode_once();  // warm-up

    constexpr int runs = 3;
    double encode_seconds = 0;
    for (int i = 0; i < runs; ++i) {
        auto t0 = clock::now();
        PairBuffer b = encode_once();
        auto t1 = clock::now();
        encode_seconds += std::chrono::duration<double>(t1 - t0).count();
        checksum += b.bytes().size() & 1;  // keep the run observable
    }
    double decode_seconds = 0;
    for (int i = 0; i < runs; ++i) {
        auto t0 = clock::now();
        std::uint64_t acc = decode_once();
        auto t1 = clock::now();
        decode_seconds += std::chrono::duration<double>(t1 - t0).count();
        checksum += acc;
    }

    ThroughputReport report;
    report.trits = scale;
    report.payload_bytes = buffer.bytes().size();
    double mb = static_cast<double>(report.payload_bytes) / 1e6;
    report.encode_mb_per_s = mb / (encode_seconds / runs);
    report.decode_mb_per_s = mb / (decode_seconds / runs);
    report.checksum = checksum;
    return report;
}

}  // namespace ntrn
