#include "ntrn/container.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"
#include "ntrn/errors.hpp"

namespace ntrn {

namespace {

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64le(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64le(std::span<const std::uint8_t> in) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | in[static_cast<std::size_t>(i)];
    return v;
}

std::uint32_t get_u32le(std::span<const std::uint8_t> in) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | in[static_cast<std::size_t>(i)];
    return v;
}

std::uint64_t payload_bytes_for(std::uint64_t pair_count) {
    return (pair_count + 3) / 4;
}

void append_header(std::vector<std::uint8_t>& out, const SchemeConfig& config, bool transcoded,
                   std::uint64_t pair_count, std::uint64_t original_byte_length) {
    out.insert(out.end(), container_magic.begin(), container_magic.end());
    out.push_back(container_version);
    std::uint8_t flags = static_cast<std::uint8_t>(config.delimiter.value << 6);
    if (config.mapping == Mapping::unsigned_ternary) flags |= 1u << 5;
    if (config.variant == Variant::dual_starter) flags |= 1u << 4;
    if (transcoded) flags |= 1u << 3;
    out.push_back(flags);
    put_u64le(out, pair_count);
    put_u64le(out, original_byte_length);
}

// payload bytes exactly ceil(pair_count/4); a from_bytes buffer may be larger
void append_payload(std::vector<std::uint8_t>& out, const PairBuffer& payload) {
    auto bytes = payload.bytes().first(payload_bytes_for(payload.pair_count()));
    out.insert(out.end(), bytes.begin(), bytes.end());
}

}  // namespace

ContainerHeader read_header(std::span<const std::uint8_t> file) {
    if (file.size() < container_header_size)
        throw ParseError("container truncated: " + std::to_string(file.size()) +
                         " bytes, header needs " + std::to_string(container_header_size));
    if (!std::equal(container_magic.begin(), container_magic.end(), file.begin()))
        throw ParseError("bad magic: not an NTRN container");
    if (file[4] != container_version)
        throw ParseError("unsupported container version " + std::to_string(file[4]));
    std::uint8_t flags = file[5];
    if (flags & 0b111)
        throw ParseError("reserved scheme_flags bits set");
    ContainerHeader h;
    h.config.delimiter = BitPair{static_cast<std::uint8_t>(flags >> 6)};
    h.config.mapping = (flags & (1u << 5)) ? Mapping::unsigned_ternary : Mapping::balanced;
    h.config.variant = (flags & (1u << 4)) ? Variant::dual_starter : Variant::single_delimiter;
    h.transcoded = (flags & (1u << 3)) != 0;
    h.payload_pair_count = get_u64le(file.subspan(6, 8));
    h.original_byte_length = get_u64le(file.subspan(14, 8));
    if (!h.transcoded && h.original_byte_length != 0)
        throw ParseError("original_byte_length set without the transcoded flag");
    return h;
}

std::vector<std::uint8_t> write_container(const PairBuffer& payload, const SchemeConfig& config,
                                          std::optional<std::uint64_t> transcoded_length) {
    std::vector<std::uint8_t> out;
    out.reserve(container_header_size + payload_bytes_for(payload.pair_count()));
    append_header(out, config, transcoded_length.has_value(), payload.pair_count(),
                  transcoded_length.value_or(0));
    append_payload(out, payload);
    return out;
}

ContainerView read_container(std::span<const std::uint8_t> file) {
    ContainerHeader h = read_header(file);
    std::uint64_t remaining = file.size() - container_header_size;
    if (h.payload_pair_count > remaining * 4)
        throw ParseError("truncated payload: " + std::to_string(remaining) + " bytes cannot hold " +
                         std::to_string(h.payload_pair_count) + " pairs");
    std::uint64_t needed = payload_bytes_for(h.payload_pair_count);
    if (remaining != needed)
        throw ParseError("container size mismatch: " + std::to_string(remaining) +
                         " payload bytes, pair count needs " + std::to_string(needed));
    auto body = file.subspan(container_header_size);
    ContainerView view;
    view.config = h.config;
    view.payload = PairBuffer::from_bytes(std::vector<std::uint8_t>(body.begin(), body.end()),
                                          h.payload_pair_count);
    if (h.transcoded) view.transcoded_length = h.original_byte_length;
    return view;
}

std::uint64_t ModelManifest::tensor_count() const {
    std::uint64_t n = 0;
    for (const auto& l : layers) n += l.tensors.size();
    return n;
}

std::uint64_t ModelManifest::weight_count() const {
    std::uint64_t n = 0;
    for (const auto& l : layers)
        for (const auto& t : l.tensors) n += t.elements;
    return n;
}

void ModelManifest::validate() const {
    std::unordered_set<std::string> layer_names;
    for (const auto& l : layers) {
        if (l.name.empty()) throw ArgumentError("manifest layer with empty name");
        if (!layer_names.insert(l.name).second)
            throw ArgumentError("duplicate layer name '" + l.name + "'");
        if (l.tensors.empty())
            throw ArgumentError("layer '" + l.name + "' has no tensors");
        std::unordered_set<std::string> tensor_names;
        for (const auto& t : l.tensors) {
            if (t.name.empty())
                throw ArgumentError("layer '" + l.name + "' has a tensor with empty name");
            if (!tensor_names.insert(t.name).second)
                throw ArgumentError("duplicate tensor name '" + t.name + "' in layer '" + l.name + "'");
            if (t.elements == 0)
                throw ArgumentError("tensor '" + l.name + "/" + t.name + "' has zero elements");
        }
    }
}

std::string ModelManifest::to_json() const {
    nlohmann::json doc;
    doc["layers"] = nlohmann::json::array();
    for (const auto& l : layers) {
        nlohmann::json jl;
        jl["name"] = l.name;
        jl["tensors"] = nlohmann::json::array();
        for (const auto& t : l.tensors)
            jl["tensors"].push_back({{"name", t.name}, {"elements", t.elements}});
        doc["layers"].push_back(std::move(jl));
    }
    return doc.dump();
}

ModelManifest ModelManifest::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest is not valid JSON: ") + e.what());
    }
    ModelManifest m;
    try {
        if (!doc.is_object() || !doc.contains("layers") || !doc["layers"].is_array())
            throw ParseError("manifest must be an object with a 'layers' array");
        for (const auto& jl : doc["layers"]) {
            LayerSpec layer;
            layer.name = jl.at("name").get<std::string>();
            for (const auto& jt : jl.at("tensors"))
                layer.tensors.push_back(
                    {jt.at("name").get<std::string>(), jt.at("elements").get<std::uint64_t>()});
            m.layers.push_back(std::move(layer));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest shape invalid: ") + e.what());
    }
    return m;
}

std::uint64_t boundary_overhead_bits(std::uint64_t layer_count, std::uint64_t tensor_count) {
    return 2 * layer_count + 4 * tensor_count;
}

std::uint64_t boundary_overhead_bits(const ModelManifest& manifest) {
    return boundary_overhead_bits(manifest.layer_count(), manifest.tensor_count());
}

std::vector<std::uint8_t> pack_model(const ModelManifest& manifest, std::span<const Trit> weights,
                                     const SchemeConfig& config) {
    manifest.validate();
    if (config.variant != Variant::single_delimiter)
        throw ArgumentError("pack_model requires a single-delimiter scheme");
    if (weights.size() != manifest.weight_count())
        throw ArgumentError("weight count mismatch: manifest declares " +
                            std::to_string(manifest.weight_count()) + ", got " +
                            std::to_string(weights.size()));

    PairBuffer payload;
    payload.reserve_pairs(weights.size() + boundary_overhead_bits(manifest) / 2);
    std::size_t off = 0;
    for (const auto& layer : manifest.layers) {
        for (std::size_t ti = 0; ti < layer.tensors.size(); ++ti) {
            const auto& tensor = layer.tensors[ti];
            append_data_run(payload, weights.subspan(off, tensor.elements), config);
            off += tensor.elements;
            // a layer's final tensor closes tensor and layer in one fused run
            bool layer_end = (ti + 1 == layer.tensors.size());
            append_boundary(payload, layer_end ? 3 : 2, config);
        }
    }

    std::string manifest_json = manifest.to_json();
    std::vector<std::uint8_t> out;
    out.reserve(container_header_size + 4 + manifest_json.size() +
                payload_bytes_for(payload.pair_count()));
    append_header(out, config, false, payload.pair_count(), 0);
    put_u32le(out, static_cast<std::uint32_t>(manifest_json.size()));
    out.insert(out.end(), manifest_json.begin(), manifest_json.end());
    append_payload(out, payload);
    return out;
}

ModelFileView read_model_container(std::span<const std::uint8_t> file) {
    ContainerHeader h = read_header(file);
    if (h.transcoded)
        throw ParseError("model container has the transcoded flag set");
    if (file.size() < container_header_size + 4)
        throw ParseError("model container truncated before manifest length");
    std::uint32_t mlen = get_u32le(file.subspan(container_header_size, 4));
    std::uint64_t payload_off = container_header_size + 4 + static_cast<std::uint64_t>(mlen);
    if (file.size() < payload_off)
        throw ParseError("model container truncated inside manifest (" + std::to_string(mlen) +
                         " bytes declared)");
    std::uint64_t remaining = file.size() - payload_off;
    if (h.payload_pair_count > remaining * 4)
        throw ParseError("truncated payload: " + std::to_string(remaining) + " bytes cannot hold " +
                         std::to_string(h.payload_pair_count) + " pairs");
    std::uint64_t needed = payload_bytes_for(h.payload_pair_count);
    if (remaining != needed)
        throw ParseError("model container size mismatch: " + std::to_string(remaining) +
                         " payload bytes, pair count needs " + std::to_string(needed));

    ModelFileView view;
    view.config = h.config;
    view.manifest = ModelManifest::from_json(std::string_view(
        reinterpret_cast<const char*>(file.data()) + container_header_size + 4, mlen));
    auto body = file.subspan(payload_off);
    view.payload = PairBuffer::from_bytes(std::vector<std::uint8_t>(body.begin(), body.end()),
                                          h.payload_pair_count);
    return view;
}

UnpackedModel unpack_model(std::span<const std::uint8_t> file) {
    ModelFileView view = read_model_container(file);
    try {
        view.manifest.validate();
    } catch (const ArgumentError& e) {
        throw CorruptionError(std::string("stored manifest invalid: ") + e.what());
    }

    // re-derive segmentation: level 2 closes a tensor, level >= 3 closes the
    // layer as well (higher levels close enclosing scopes this format does
    // not track); a bare level-1 run never comes from pack_model
    UnpackedModel result;
    result.manifest = view.manifest;
    result.config = view.config;
    result.weights.reserve(view.payload.pair_count());

    std::vector<std::vector<std::uint64_t>> got_layers;
    std::vector<std::uint64_t> cur_layer;
    std::uint64_t cur_elements = 0;
    bool open = false;
    bool bad_level = false;
    for_each_event(view.payload, view.config, [&](const Event& e) {
        if (e.kind == Event::Kind::data) {
            result.weights.push_back(e.trit);
            ++cur_elements;
            open = true;
        } else if (e.level == 1) {
            bad_level = true;
        } else {
            cur_layer.push_back(cur_elements);
            cur_elements = 0;
            open = false;
            if (e.level >= 3) {
                got_layers.push_back(std::move(cur_layer));
                cur_layer.clear();
            }
        }
    });
    if (bad_level)
        throw CorruptionError("level-1 boundary in model payload; tensors close at level 2");
    if (open || !cur_layer.empty())
        throw CorruptionError("model payload ends inside an unterminated tensor or layer");

    if (got_layers.size() != view.manifest.layers.size())
        throw CorruptionError("payload closes " + std::to_string(got_layers.size()) +
                              " layers, manifest declares " +
                              std::to_string(view.manifest.layers.size()));
    for (std::size_t li = 0; li < got_layers.size(); ++li) {
        const auto& want = view.manifest.layers[li];
        const auto& got = got_layers[li];
        if (got.size() != want.tensors.size())
            throw CorruptionError("layer '" + want.name + "' closes " + std::to_string(got.size()) +
                                  " tensors, manifest declares " +
                                  std::to_string(want.tensors.size()));
        for (std::size_t ti = 0; ti < got.size(); ++ti)
            if (got[ti] != want.tensors[ti].elements)
                throw CorruptionError("tensor '" + want.name + "/" + want.tensors[ti].name +
                                      "' carries " + std::to_string(got[ti]) +
                                      " elements, manifest declares " +
                                      std::to_string(want.tensors[ti].elements));
    }
    return result;
}

}  // namespace ntrn
