#include "ntrn/dual.hpp"

namespace ntrn {

void DualConfig::validate() const {
    if (starter_a.value > 3 || starter_b.value > 3)
        throw ArgumentError("starter pair value out of range");
    if (starter_a == starter_b)
        throw ArgumentError("dual starters must be distinct pairs");
}

BitPair DualConfig::continuation(unsigned bit) const {
    validate();
    BitPair cont[2];
    unsigned n = 0;
    for (std::uint8_t v = 0; v < 4; ++v)
        if (v != starter_a.value && v != starter_b.value) cont[n++] = BitPair{v};
    if (bit > 1) throw ArgumentError("payload bit must be 0 or 1");
    return cont[bit];
}

PairBuffer encode_dual(std::span<const DualSymbol> symbols, const DualConfig& config) {
    config.validate();
    const BitPair cont0 = config.continuation(0);
    const BitPair cont1 = config.continuation(1);
    PairBuffer out;
    for (const DualSymbol& s : symbols) {
        out.append(s.ns == DualNamespace::a ? config.starter_a : config.starter_b);
        for (std::uint8_t bit : s.bits) {
            if (bit > 1) throw ArgumentError("payload bit must be 0 or 1");
            out.append(bit ? cont1 : cont0);
        }
    }
    return out;
}

DualDecodeResult decode_dual(const PairBuffer& buffer, const DualConfig& config) {
    config.validate();
    const BitPair cont1 = config.continuation(1);
    DualDecodeResult result;
    bool open = false;
    const std::uint64_t n = buffer.pair_count();
    for (std::uint64_t i = 0; i < n; ++i) {
        BitPair p = buffer.pair(i);
        if (p == config.starter_a || p == config.starter_b) {
            result.symbols.push_back(
                DualSymbol{p == config.starter_a ? DualNamespace::a : DualNamespace::b, {}});
            open = true;
        } else if (open) {
            result.symbols.back().bits.push_back(p == cont1 ? 1 : 0);
        } else {
            // continuation with no symbol in progress: entered mid-symbol
            ++result.skipped_prefix_pairs;
        }
    }
    return result;
}

}  // namespace ntrn
