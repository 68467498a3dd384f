#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ntrn/pair_buffer.hpp"
#include "ntrn/scheme.hpp"

namespace ntrn {

// Two-namespace self-delimiting variant: every symbol opens with one of two
// starter pairs and carries its payload in continuation pairs, one bit each.
// Density is fixed at 0.5 data bits per encoded bit regardless of content.

enum class DualNamespace : std::uint8_t { a = 0, b = 1 };

struct DualSymbol {
    DualNamespace ns = DualNamespace::a;
    std::vector<std::uint8_t> bits;  // payload, one 0/1 per element, may be empty

    friend bool operator==(const DualSymbol&, const DualSymbol&) = default;
};

// Default starters follow the reference assignment {10, 11}; the remaining
// two pairs, in ascending order, are the continuations for bits 0 and 1.
struct DualConfig {
    BitPair starter_a = bits10;
    BitPair starter_b = bits11;

    void validate() const;
    // continuation pair carrying the given bit (0 or 1)
    BitPair continuation(unsigned bit) const;
    friend bool operator==(const DualConfig&, const DualConfig&) = default;
};

struct DualDecodeResult {
    std::vector<DualSymbol> symbols;
    // pairs discarded before the first starter; nonzero means the stream was
    // entered mid-symbol and decoding re-synchronised at the next starter
    std::uint64_t skipped_prefix_pairs = 0;
};

PairBuffer encode_dual(std::span<const DualSymbol> symbols, const DualConfig& config = {});
DualDecodeResult decode_dual(const PairBuffer& buffer, const DualConfig& config = {});

}  // namespace ntrn
