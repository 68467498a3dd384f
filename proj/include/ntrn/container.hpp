#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ntrn/codec.hpp"
#include "ntrn/pair_buffer.hpp"
#include "ntrn/scheme.hpp"

namespace ntrn {

// On-disk layout, all integers little-endian:
//   offset 0   magic "NTRN"
//   offset 4   version (1)
//   offset 5   scheme_flags: bits 7-6 delimiter pair, bit 5 mapping,
//              bit 4 variant, bit 3 transcoded, bits 2-0 reserved zero
//   offset 6   payload_pair_count  u64
//   offset 14  original_byte_length u64 (zero unless transcoded)
//   offset 22  payload bytes, exactly ceil(pair_count / 4)
// Model files insert a manifest section between header and payload:
//   u32 manifest byte length, then the manifest as JSON text.
inline constexpr std::array<std::uint8_t, 4> container_magic{0x4E, 0x54, 0x52, 0x4E};
inline constexpr std::uint8_t container_version = 1;
inline constexpr std::size_t container_header_size = 22;

struct ContainerHeader {
    SchemeConfig config;
    bool transcoded = false;
    std::uint64_t payload_pair_count = 0;
    std::uint64_t original_byte_length = 0;

    friend bool operator==(const ContainerHeader&, const ContainerHeader&) = default;
};

// Header-only parse; validates magic, version, reserved bits and the
// transcoded/original_byte_length pairing, not the payload extent.
ContainerHeader read_header(std::span<const std::uint8_t> file);

std::vector<std::uint8_t> write_container(const PairBuffer& payload, const SchemeConfig& config,
                                          std::optional<std::uint64_t> transcoded_length = {});

struct ContainerView {
    SchemeConfig config;
    PairBuffer payload;
    std::optional<std::uint64_t> transcoded_length;
};

// Strict plain-container reader: after the header there must be exactly
// ceil(pair_count/4) bytes. Model files do not parse here by design.
ContainerView read_container(std::span<const std::uint8_t> file);

struct TensorSpec {
    std::string name;
    std::uint64_t elements = 0;

    friend bool operator==(const TensorSpec&, const TensorSpec&) = default;
};

struct LayerSpec {
    std::string name;
    std::vector<TensorSpec> tensors;

    friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

struct ModelManifest {
    std::vector<LayerSpec> layers;

    std::uint64_t layer_count() const { return layers.size(); }
    std::uint64_t tensor_count() const;
    std::uint64_t weight_count() const;

    // layer names unique and non-empty; every layer has >= 1 tensor; tensor
    // names unique within their layer and non-empty; every element count >= 1
    void validate() const;

    std::string to_json() const;
    static ModelManifest from_json(std::string_view text);

    friend bool operator==(const ModelManifest&, const ModelManifest&) = default;
};

// Framing cost of a packed model: one level-2 run per tensor, widened to
// level 3 at each layer's final tensor, i.e. 2*layers + 4*tensors bits.
std::uint64_t boundary_overhead_bits(std::uint64_t layer_count, std::uint64_t tensor_count);
std::uint64_t boundary_overhead_bits(const ModelManifest& manifest);

// weights are the manifest's tensors concatenated in order, one trit per
// element, in the config's mapping domain.
std::vector<std::uint8_t> pack_model(const ModelManifest& manifest, std::span<const Trit> weights,
                                     const SchemeConfig& config);

struct ModelFileView {
    SchemeConfig config;
    ModelManifest manifest;
    PairBuffer payload;
};

ModelFileView read_model_container(std::span<const std::uint8_t> file);

struct UnpackedModel {
    ModelManifest manifest;
    std::vector<Trit> weights;
    SchemeConfig config;
};

// Inverse of pack_model. The payload's boundary structure is re-derived and
// checked against the manifest; any disagreement is corruption, not a crash.
UnpackedModel unpack_model(std::span<const std::uint8_t> file);

}  // namespace ntrn
