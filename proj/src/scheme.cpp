#include "ntrn/scheme.hpp"

namespace ntrn {

std::string to_string(BitPair p) {
    std::string s(2, '0');
    s[0] = (p.value & 2) ? '1' : '0';
    s[1] = (p.value & 1) ? '1' : '0';
    return s;
}

BitPair bit_pair_from_string(const std::string& s) {
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1'))
        throw ArgumentError("bit pair must be two binary digits, got '" + s + "'");
    return BitPair{static_cast<std::uint8_t>((s[0] - '0') * 2 + (s[1] - '0'))};
}

std::array<BitPair, 3> data_symbols(const SchemeConfig& config) {
    if (config.variant != Variant::single_delimiter)
        throw ArgumentError("data_symbols requires a single-delimiter scheme");
    std::array<BitPair, 3> out{};
    unsigned n = 0;
    for (std::uint8_t v = 0; v < 4; ++v)
        if (v != config.delimiter.value) out[n++] = BitPair{v};
    return out;
}

BitPair trit_to_pair(Trit t, const SchemeConfig& config) {
    return data_symbols(config)[trit_rank(t, config.mapping)];
}

Trit pair_to_trit(BitPair p, const SchemeConfig& config) {
    if (p == config.delimiter)
        throw ArgumentError("delimiter pair carries no trit value");
    if (p.value > 3) throw ArgumentError("bit pair value out of range");
    unsigned rank = p.value - (p.value > config.delimiter.value ? 1 : 0);
    return trit_domain(config.mapping)[rank];
}

}  // namespace ntrn
