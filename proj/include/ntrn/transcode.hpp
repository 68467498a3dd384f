#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ntrn/scheme.hpp"

namespace ntrn {

// Fixed-size-block change of base. Each block of block_bytes bytes is read as
// one big-endian integer and written as exactly trits_per_block base-3 digits,
// most significant first. trits_per_block must be the smallest t with
// 3^t >= 256^block_bytes, which makes the per-block map injective while
// wasting less than one trit per block. Trit values are the unsigned domain
// 0..2 regardless of any pair-level mapping applied downstream.
struct TritBlockCodecParams {
    std::uint32_t block_bytes = 19;
    std::uint32_t trits_per_block = 96;

    void validate() const;
    static TritBlockCodecParams for_block_bytes(std::uint32_t block_bytes);
};

// Smallest t with 3^t >= 256^byte_count, by exact integer arithmetic.
std::uint32_t min_trits_for_bytes(std::uint32_t byte_count);

// Trits produced for an input of the given length: full blocks at
// trits_per_block, plus a shorter final block sized for the remainder.
std::uint64_t trit_count_for_length(std::uint64_t byte_length,
                                    const TritBlockCodecParams& params = {});

std::vector<Trit> binary_to_trits(std::span<const std::uint8_t> data,
                                  const TritBlockCodecParams& params = {});

// original_byte_length is carried out of band (the container header stores
// it); the trit count must match trit_count_for_length exactly. A block whose
// digits decode to a value >= 256^block_size never came from an encode and is
// reported as corruption.
std::vector<std::uint8_t> trits_to_binary(std::span<const Trit> trits,
                                          std::uint64_t original_byte_length,
                                          const TritBlockCodecParams& params = {});

// Encoded bits per input bit: (2 * trits_per_block) / (8 * block_bytes).
double expansion_factor(const TritBlockCodecParams& params = {});

// Entropy floor for any binary-to-ternary map: 2 / log2(3).
double ideal_expansion_factor();

}  // namespace ntrn
