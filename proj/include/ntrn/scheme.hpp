#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ntrn/errors.hpp"

namespace ntrn {

// One 2-bit symbol. value 0..3 <-> bit patterns 00,01,10,11 (high bit first).
struct BitPair {
    std::uint8_t value = 0;

    friend constexpr bool operator==(BitPair, BitPair) = default;
    friend constexpr auto operator<=>(BitPair, BitPair) = default;
};

inline constexpr BitPair bits00{0};
inline constexpr BitPair bits01{1};
inline constexpr BitPair bits10{2};
inline constexpr BitPair bits11{3};

inline BitPair make_bit_pair(unsigned v) {
    if (v > 3) throw ArgumentError("bit pair value out of range: " + std::to_string(v));
    return BitPair{static_cast<std::uint8_t>(v)};
}

// "11", "01", ... <-> BitPair. Used by the CLI and by header round-trips.
std::string to_string(BitPair p);
BitPair bit_pair_from_string(const std::string& s);

enum class Mapping : std::uint8_t {
    balanced = 0,         // trit values -1, 0, +1
    unsigned_ternary = 1  // trit values  0, 1,  2
};

enum class Variant : std::uint8_t {
    single_delimiter = 0,
    dual_starter = 1
};

struct SchemeConfig {
    BitPair delimiter = bits11;
    Mapping mapping = Mapping::balanced;
    Variant variant = Variant::single_delimiter;

    friend constexpr bool operator==(const SchemeConfig&, const SchemeConfig&) = default;
};

// A single ternary value; which 3-value domain applies comes from Mapping.
struct Trit {
    std::int8_t value = 0;

    friend constexpr bool operator==(Trit, Trit) = default;
    friend constexpr auto operator<=>(Trit, Trit) = default;
};

constexpr std::array<Trit, 3> trit_domain(Mapping m) {
    return m == Mapping::balanced ? std::array<Trit, 3>{Trit{-1}, Trit{0}, Trit{1}}
                                  : std::array<Trit, 3>{Trit{0}, Trit{1}, Trit{2}};
}

constexpr bool in_domain(Trit t, Mapping m) {
    auto lo = (m == Mapping::balanced) ? -1 : 0;
    return t.value >= lo && t.value <= lo + 2;
}

// Position of the trit within its ordered domain, 0..2.
inline unsigned trit_rank(Trit t, Mapping m) {
    if (!in_domain(t, m))
        throw ArgumentError("trit value " + std::to_string(t.value) + " outside mapping domain");
    return static_cast<unsigned>(t.value - (m == Mapping::balanced ? -1 : 0));
}

// The three non-delimiter pairs in ascending numeric order; index = trit rank.
// Ascending-order assignment is what makes every delimiter choice isomorphic.
std::array<BitPair, 3> data_symbols(const SchemeConfig& config);

BitPair trit_to_pair(Trit t, const SchemeConfig& config);
Trit pair_to_trit(BitPair p, const SchemeConfig& config);

}  // namespace ntrn
