#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ntrn/errors.hpp"
#include "ntrn/transcode.hpp"

namespace {

std::vector<ntrn::Trit> trits_of(std::initializer_list<int> values) {
    std::vector<ntrn::Trit> out;
    for (int v : values) out.push_back(ntrn::Trit{static_cast<std::int8_t>(v)});
    return out;
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng());
    return out;
}

}  // namespace

TEST_CASE("minimal trit counts") {
    CHECK(ntrn::min_trits_for_bytes(1) == 6);
    CHECK(ntrn::min_trits_for_bytes(2) == 11);
    CHECK(ntrn::min_trits_for_bytes(4) == 21);
    CHECK(ntrn::min_trits_for_bytes(19) == 96);
    CHECK_THROWS_AS(ntrn::min_trits_for_bytes(0), ntrn::ArgumentError);
}

TEST_CASE("default parameters are the 19-byte/96-trit block") {
    ntrn::TritBlockCodecParams params;
    CHECK(params.block_bytes == 19);
    CHECK(params.trits_per_block == 96);
    params.validate();

    CHECK(ntrn::TritBlockCodecParams::for_block_bytes(4).trits_per_block == 21);
    CHECK_THROWS_AS((ntrn::TritBlockCodecParams{19, 95}.validate()), ntrn::ArgumentError);
    CHECK_THROWS_AS((ntrn::TritBlockCodecParams{19, 97}.validate()), ntrn::ArgumentError);
    CHECK_THROWS_AS((ntrn::TritBlockCodecParams{0, 0}.validate()), ntrn::ArgumentError);
}

TEST_CASE("single byte encodes to six digits MSB-first") {
    auto trits = ntrn::binary_to_trits(std::vector<std::uint8_t>{0x05});
    CHECK(trits == trits_of({0, 0, 0, 0, 1, 2}));
    CHECK(ntrn::trits_to_binary(trits, 1) == std::vector<std::uint8_t>{0x05});
}

TEST_CASE("trit counts per input length") {
    CHECK(ntrn::trit_count_for_length(0) == 0);
    CHECK(ntrn::trit_count_for_length(1) == 6);
    CHECK(ntrn::trit_count_for_length(19) == 96);
    CHECK(ntrn::trit_count_for_length(20) == 102);
    CHECK(ntrn::trit_count_for_length(38) == 192);
    CHECK(ntrn::trit_count_for_length(65536) == 331130);
}

TEST_CASE("digits beyond the block range are corruption") {
    CHECK_THROWS_AS(ntrn::trits_to_binary(trits_of({2, 2, 2, 2, 2, 2}), 1),
                    ntrn::CorruptionError);
    // largest valid single-byte block: 255 = 100110 base 3
    CHECK(ntrn::trits_to_binary(trits_of({1, 0, 0, 1, 1, 0}), 1) ==
          std::vector<std::uint8_t>{0xFF});
    // smallest invalid: 256 = 100111 base 3
    CHECK_THROWS_AS(ntrn::trits_to_binary(trits_of({1, 0, 0, 1, 1, 1}), 1),
                    ntrn::CorruptionError);
}

TEST_CASE("count and domain mismatches are argument errors") {
    CHECK_THROWS_AS(ntrn::trits_to_binary(trits_of({0, 0, 0}), 1), ntrn::ArgumentError);
    CHECK_THROWS_AS(ntrn::trits_to_binary(trits_of({0, 0, 0, 0, 0, 3}), 1), ntrn::ArgumentError);
    CHECK_THROWS_AS(ntrn::trits_to_binary(trits_of({0, 0, 0, 0, 0, -1}), 1), ntrn::ArgumentError);
}

TEST_CASE("empty input round trips to empty output") {
    auto trits = ntrn::binary_to_trits(std::vector<std::uint8_t>{});
    CHECK(trits.empty());
    CHECK(ntrn::trits_to_binary(trits, 0).empty());
}

TEST_CASE("round trip across block seams and sizes") {
    std::mt19937_64 rng(17);
    for (std::size_t n : {1u, 2u, 18u, 19u, 20u, 37u, 38u, 39u, 57u, 255u, 4096u}) {
        for (int iter = 0; iter < 50; ++iter) {
            auto data = random_bytes(rng, n);
            auto trits = ntrn::binary_to_trits(data);
            CHECK(trits.size() == ntrn::trit_count_for_length(n));
            CHECK(ntrn::trits_to_binary(trits, n) == data);
        }
    }
}

TEST_CASE("every single-byte value round trips under 1-byte blocks") {
    auto params = ntrn::TritBlockCodecParams::for_block_bytes(1);
    for (unsigned v = 0; v < 256; ++v) {
        std::vector<std::uint8_t> data{static_cast<std::uint8_t>(v)};
        auto trits = ntrn::binary_to_trits(data, params);
        REQUIRE(trits.size() == 6);
        CHECK(ntrn::trits_to_binary(trits, 1, params) == data);
    }
}

TEST_CASE("round trip under alternate block sizes") {
    std::mt19937_64 rng(23);
    for (std::uint32_t bb : {2u, 3u, 8u, 32u}) {
        auto params = ntrn::TritBlockCodecParams::for_block_bytes(bb);
        for (int iter = 0; iter < 40; ++iter) {
            auto data = random_bytes(rng, rng() % 100);
            auto trits = ntrn::binary_to_trits(data, params);
            CHECK(ntrn::trits_to_binary(trits, data.size(), params) == data);
        }
    }
}

TEST_CASE("expansion factors") {
    CHECK(ntrn::expansion_factor() == doctest::Approx(192.0 / 152.0).epsilon(1e-15));
    CHECK(ntrn::ideal_expansion_factor() == doctest::Approx(2.0 / std::log2(3.0)).epsilon(1e-15));
    CHECK(ntrn::expansion_factor() > ntrn::ideal_expansion_factor());

    double measured = 2.0 * ntrn::trit_count_for_length(65536) / (65536.0 * 8.0);
    CHECK(measured == doctest::Approx(1.2632).epsilon(0.004));
}
