#include "ntrn/transcode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ntrn/errors.hpp"

namespace ntrn {

namespace {

constexpr std::size_t limbs_for(std::size_t byte_count) {
    return (byte_count + 3) / 4;
}

// Little-endian 32-bit limbs of the block value (block bytes are big-endian).
void load_limbs(std::span<const std::uint8_t> block, std::vector<std::uint32_t>& limbs) {
    limbs.assign(limbs_for(block.size()), 0);
    for (std::size_t i = 0; i < block.size(); ++i) {
        std::size_t from_lsb = block.size() - 1 - i;
        limbs[from_lsb / 4] |= static_cast<std::uint32_t>(block[i]) << (8 * (from_lsb % 4));
    }
}

std::uint32_t divmod3(std::vector<std::uint32_t>& limbs) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs[i];
        limbs[i] = static_cast<std::uint32_t>(cur / 3);
        rem = cur % 3;
    }
    return static_cast<std::uint32_t>(rem);
}

}  // namespace

std::uint32_t min_trits_for_bytes(std::uint32_t byte_count) {
    if (byte_count == 0) throw ArgumentError("block size must be >= 1 byte");
    // grow 3^t until it needs more bytes than 256^byte_count's predecessor;
    // the first power reaching byte_count+1 bytes is the first >= 256^byte_count
    std::vector<std::uint8_t> pow{1};
    std::uint32_t t = 0;
    while (pow.size() < static_cast<std::size_t>(byte_count) + 1) {
        unsigned carry = 0;
        for (auto& b : pow) {
            unsigned cur = b * 3u + carry;
            b = static_cast<std::uint8_t>(cur & 0xFF);
            carry = cur >> 8;
        }
        if (carry) pow.push_back(static_cast<std::uint8_t>(carry));
        ++t;
    }
    return t;
}

void TritBlockCodecParams::validate() const {
    if (block_bytes == 0) throw ArgumentError("block size must be >= 1 byte");
    std::uint32_t want = min_trits_for_bytes(block_bytes);
    if (trits_per_block != want)
        throw ArgumentError("trits_per_block must be " + std::to_string(want) + " for " +
                            std::to_string(block_bytes) + "-byte blocks, got " +
                            std::to_string(trits_per_block));
}

TritBlockCodecParams TritBlockCodecParams::for_block_bytes(std::uint32_t block_bytes) {
    return TritBlockCodecParams{block_bytes, min_trits_for_bytes(block_bytes)};
}

std::uint64_t trit_count_for_length(std::uint64_t byte_length, const TritBlockCodecParams& params) {
    params.validate();
    std::uint64_t full = byte_length / params.block_bytes;
    std::uint32_t rem = static_cast<std::uint32_t>(byte_length % params.block_bytes);
    return full * params.trits_per_block + (rem ? min_trits_for_bytes(rem) : 0);
}

std::vector<Trit> binary_to_trits(std::span<const std::uint8_t> data,
                                  const TritBlockCodecParams& params) {
    params.validate();
    std::vector<Trit> out;
    out.reserve(trit_count_for_length(data.size(), params));
    std::vector<std::uint32_t> limbs;
    std::size_t off = 0;
    while (off < data.size()) {
        std::size_t m = std::min<std::size_t>(params.block_bytes, data.size() - off);
        std::uint32_t t = (m == params.block_bytes) ? params.trits_per_block
                                                    : min_trits_for_bytes(static_cast<std::uint32_t>(m));
        load_limbs(data.subspan(off, m), limbs);
        // repeated division emits digits least significant first; fill backward
        std::size_t base = out.size();
        out.resize(base + t);
        for (std::uint32_t k = 0; k < t; ++k)
            out[base + t - 1 - k] = Trit{static_cast<std::int8_t>(divmod3(limbs))};
        off += m;
    }
    return out;
}

std::vector<std::uint8_t> trits_to_binary(std::span<const Trit> trits,
                                          std::uint64_t original_byte_length,
                                          const TritBlockCodecParams& params) {
    params.validate();
    std::uint64_t expected = trit_count_for_length(original_byte_length, params);
    if (trits.size() != expected)
        throw ArgumentError("trit count " + std::to_string(trits.size()) +
                            " does not match declared byte length " +
                            std::to_string(original_byte_length) + " (need " +
                            std::to_string(expected) + ")");

    std::vector<std::uint8_t> out;
    out.reserve(original_byte_length);
    std::vector<std::uint32_t> limbs;
    std::uint64_t byte_off = 0;
    std::size_t trit_off = 0;
    while (byte_off < original_byte_length) {
        std::size_t m = std::min<std::uint64_t>(params.block_bytes, original_byte_length - byte_off);
        std::uint32_t t = (m == params.block_bytes) ? params.trits_per_block
                                                    : min_trits_for_bytes(static_cast<std::uint32_t>(m));
        limbs.assign(limbs_for(m), 0);
        bool overflow = false;
        for (std::uint32_t k = 0; k < t; ++k) {
            Trit d = trits[trit_off + k];
            if (d.value < 0 || d.value > 2)
                throw ArgumentError("trit value " + std::to_string(d.value) +
                                    " outside the unsigned digit domain");
            std::uint64_t carry = static_cast<std::uint64_t>(d.value);
            for (auto& limb : limbs) {
                std::uint64_t cur = static_cast<std::uint64_t>(limb) * 3 + carry;
                limb = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            if (carry) overflow = true;
        }
        // injectivity guard: every legal block value fits in m bytes
        for (std::size_t i = m; !overflow && i < limbs.size() * 4; ++i)
            if ((limbs[i / 4] >> (8 * (i % 4))) & 0xFF) overflow = true;
        if (overflow)
            throw CorruptionError("block digits decode to a value >= 256^" + std::to_string(m) +
                                  "; no " + std::to_string(m) + "-byte block encodes to it");
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t from_lsb = m - 1 - i;
            out.push_back(static_cast<std::uint8_t>(limbs[from_lsb / 4] >> (8 * (from_lsb % 4))));
        }
        byte_off += m;
        trit_off += t;
    }
    return out;
}

double expansion_factor(const TritBlockCodecParams& params) {
    params.validate();
    return (2.0 * params.trits_per_block) / (8.0 * params.block_bytes);
}

double ideal_expansion_factor() {
    return 2.0 / std::log2(3.0);
}

}  // namespace ntrn
