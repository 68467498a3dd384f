#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ntrn/codec.hpp"
#include "ntrn/pair_buffer.hpp"

namespace ntrn {

// Bit positions to XOR into a payload, addressed as one MSB-first bitstream
// (bit b = bit b&1 of pair b>>1). Flipping is an involution, so applying the
// same spec twice restores the original buffer.
struct CorruptionSpec {
    std::vector<std::uint64_t> flip_bits;

    static CorruptionSpec at_bits(std::vector<std::uint64_t> bits);
    // flip_count distinct positions drawn from [0, total_bits); deterministic
    // for a given seed on every platform
    static CorruptionSpec random_bits(std::uint64_t flip_count, std::uint64_t seed,
                                      std::uint64_t total_bits);

    std::vector<std::uint64_t> flipped_pairs() const;
};

PairBuffer inject(const PairBuffer& buffer, const CorruptionSpec& spec);

struct CorruptionReport {
    // per flipped pair: original role vs corrupted role
    std::uint64_t false_boundaries = 0;         // data pair became the delimiter
    std::uint64_t lost_or_split_boundaries = 0; // delimiter pair became data
    std::uint64_t value_flips = 0;              // data pair became a different data pair
    std::uint64_t value_error_magnitude = 0;    // sum of |new - old| trit values
    std::uint64_t corrupted_pairs = 0;

    // event-stream realignment: one episode per classify call
    std::uint64_t resync_events = 0;            // divergences that realign before stream end
    std::uint64_t diverged_without_resync = 0;  // divergences that never realign
    std::uint64_t total_resync_distance = 0;    // corrupted events spent out of sync

    std::optional<double> mean_resync_distance() const;
    CorruptionReport& operator+=(const CorruptionReport& other);
    std::string to_text() const;
};

// Pair roles are recovered by re-flattening both event streams under config;
// resync distance is the longest-common-suffix alignment of the two event
// sequences, ties toward the earliest realignment point.
CorruptionReport classify(std::span<const Event> original, std::span<const Event> corrupted,
                          std::span<const std::uint64_t> flipped_pairs, const SchemeConfig& config);

struct VulnerabilityEstimate {
    std::uint64_t samples = 0;
    std::uint64_t false_boundaries = 0;

    bool has_rate() const { return samples != 0; }
    double rate() const;  // false boundaries per flipped data-pair bit
};

// Monte-Carlo false-boundary probability: per trial, flips_per_trial uniform
// random data pairs each take one uniform random bit flip, and hits on the
// delimiter are counted. Zero total flips yields a no-sample estimate.
VulnerabilityEstimate vulnerability_rate(const SchemeConfig& config, std::uint64_t trials,
                                         std::uint64_t flips_per_trial, std::uint64_t seed);

}  // namespace ntrn
