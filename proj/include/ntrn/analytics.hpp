#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ntrn/scheme.hpp"

namespace ntrn {

// Data bits carried per encoded bit: log2(3)/2 for single-delimiter streams
// (each pair spends 2 bits on one of 3 values), 0.5 for dual-starter streams.
double data_density(Variant variant);

// Hierarchical text framing: words close at word_level, sentences at
// sentence_level, paragraphs at paragraph_level, costing 2*level bits each.
struct TextShapeParams {
    double chars_per_word = 5;
    double words_per_sentence = 20;
    double sentences_per_paragraph = 8;
    std::uint32_t word_level = 1;
    std::uint32_t sentence_level = 2;
    std::uint32_t paragraph_level = 3;
};

// Amortised boundary bits per character:
//   2*wl/cw + 2*sl/(cw*ws) + 2*pl/(cw*ws*sp)
double amortised_overhead(const TextShapeParams& params);

struct StorageModel {
    std::string name;
    double bits_per_weight = 0;
    double per_tensor_header_bytes = 0;
};

// Q2_K, Q4_0 and int8 reference points with 256-byte per-tensor headers.
std::span<const StorageModel> default_storage_models();

struct StorageRow {
    std::string name;
    double bits_per_weight = 0;
    double payload_bytes = 0;
    double overhead_bytes = 0;  // tensor headers, or boundary bytes for the native row
    double total_bytes = 0;
    double size_ratio = 1;      // native total / this total
    double overhead_ratio = 1;  // this overhead / native overhead
};

struct StorageComparison {
    StorageRow native;  // 2.000 bits/weight plus boundary framing
    std::vector<StorageRow> models;
};

StorageComparison storage_comparison(std::uint64_t weight_count, std::uint64_t tensor_count,
                                     std::uint64_t layer_count,
                                     std::span<const StorageModel> models = default_storage_models());

struct ThroughputReport {
    std::uint64_t trits = 0;
    std::uint64_t payload_bytes = 0;
    double encode_mb_per_s = 0;  // decimal megabytes of encoded payload
    double decode_mb_per_s = 0;
    std::uint64_t checksum = 0;  // decode-side accumulator, pins the work
};

// Single-threaded, seeded, one warm-up pass excluded from timing, mean of
// three timed passes per direction.
ThroughputReport throughput_bench(std::uint64_t scale, std::uint64_t seed);

}  // namespace ntrn
