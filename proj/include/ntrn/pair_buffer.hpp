#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "ntrn/errors.hpp"
#include "ntrn/scheme.hpp"

namespace ntrn {

// Packed 2-bit pairs, most significant first: pair 0 sits in bits 7-6 of
// byte 0. pair_count is carried out of band; a trailing partial byte is
// zero-padded and the padding is never interpreted.
class PairBuffer {
public:
    PairBuffer() = default;

    static PairBuffer from_bytes(std::vector<std::uint8_t> bytes, std::uint64_t pair_count) {
        if (pair_count > bytes.size() * 4)
            throw ArgumentError("pair_count exceeds buffer capacity");
        PairBuffer b;
        b.bytes_ = std::move(bytes);
        b.pair_count_ = pair_count;
        return b;
    }

    void append(BitPair p) {
        unsigned slot = pair_count_ & 3u;
        if (slot == 0) bytes_.push_back(0);
        bytes_.back() |= static_cast<std::uint8_t>(p.value << (6 - 2 * slot));
        ++pair_count_;
    }

    void append_run(BitPair p, std::uint64_t n) {
        for (std::uint64_t i = 0; i < n; ++i) append(p);
    }

    BitPair pair(std::uint64_t index) const {
        assert(index < pair_count_);
        unsigned shift = 6 - 2 * (index & 3u);
        return BitPair{static_cast<std::uint8_t>((bytes_[index >> 2] >> shift) & 3u)};
    }

    // Bit positions address the payload as one MSB-first bitstream:
    // bit b = bit (b & 1) of pair (b >> 1), bit 0 of a pair being its high bit.
    void flip_bit(std::uint64_t bit_index) {
        assert(bit_index < bit_count());
        bytes_[bit_index >> 3] ^= static_cast<std::uint8_t>(1u << (7 - (bit_index & 7u)));
    }

    std::uint64_t pair_count() const { return pair_count_; }
    std::uint64_t bit_count() const { return pair_count_ * 2; }
    std::span<const std::uint8_t> bytes() const { return bytes_; }

    void reserve_pairs(std::uint64_t n) { bytes_.reserve((n + 3) / 4); }

    friend bool operator==(const PairBuffer&, const PairBuffer&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t pair_count_ = 0;
};

}  // namespace ntrn
