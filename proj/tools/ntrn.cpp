// ntrn: command-line front end for the NativeTernary codec library.
// All subcommands read/write files or stdin/stdout ("-") and exit with
// 0 success, 1 parse error, 2 argument error, 3 corruption error,
// 4 I/O failure, 64 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ntrn/analytics.hpp"
#include "ntrn/channel.hpp"
#include "ntrn/codec.hpp"
#include "ntrn/container.hpp"
#include "ntrn/dual.hpp"
#include "ntrn/errors.hpp"
#include "ntrn/transcode.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_input(const std::string& path) {
    if (path == "-") {
        std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(std::cin),
                                       std::istreambuf_iterator<char>()};
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("read failed on '" + path + "'");
    return data;
}

void write_output(const std::string& path, const void* data, std::size_t size) {
    if (path == "-") {
        std::cout.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
        std::cout.flush();
        if (!std::cout) throw IoError("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    out.flush();
    if (!out) throw IoError("write failed on '" + path + "'");
}

void write_output(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    write_output(path, bytes.data(), bytes.size());
}

void write_output(const std::string& path, const std::string& text) {
    write_output(path, text.data(), text.size());
}

// ---- scheme option plumbing ----

struct SchemeFlags {
    std::string delimiter = "11";
    std::string mapping = "balanced";
    std::string variant = "single";

    ntrn::SchemeConfig config() const {
        ntrn::SchemeConfig c;
        c.delimiter = ntrn::bit_pair_from_string(delimiter);
        c.mapping = mapping == "unsigned" ? ntrn::Mapping::unsigned_ternary
                                          : ntrn::Mapping::balanced;
        c.variant = variant == "dual" ? ntrn::Variant::dual_starter
                                      : ntrn::Variant::single_delimiter;
        return c;
    }
};

void add_scheme_options(CLI::App* cmd, SchemeFlags& flags, bool with_variant = true,
                        bool with_mapping = true) {
    cmd->add_option("--delimiter", flags.delimiter, "delimiter pair (00|01|10|11)")
        ->check(CLI::IsMember({"00", "01", "10", "11"}));
    if (with_mapping)
        cmd->add_option("--mapping", flags.mapping, "trit value mapping (balanced|unsigned)")
            ->check(CLI::IsMember({"balanced", "unsigned"}));
    if (with_variant)
        cmd->add_option("--variant", flags.variant, "framing variant (single|dual)")
            ->check(CLI::IsMember({"single", "dual"}));
}

// ---- event text ----

std::vector<std::string> tokenize(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

long long parse_integer(const std::string& token, std::size_t offset) {
    const char* begin = token.c_str() + offset;
    char* end = nullptr;
    errno = 0;
    long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0' || errno == ERANGE)
        throw ntrn::ParseError("malformed event token '" + token + "'");
    return v;
}

std::vector<ntrn::Event> parse_events(const std::string& text) {
    std::vector<ntrn::Event> events;
    for (const std::string& tok : tokenize(text)) {
        if (tok.size() < 2 || (tok[0] != 'D' && tok[0] != 'B'))
            throw ntrn::ParseError("unrecognized event token '" + tok +
                                   "' (want D<value> or B<level>)");
        long long v = parse_integer(tok, 1);
        if (tok[0] == 'D') {
            if (v < -1 || v > 2)
                throw ntrn::ParseError("trit value out of range in token '" + tok + "'");
            events.push_back(ntrn::Event::data(ntrn::Trit{static_cast<std::int8_t>(v)}));
        } else {
            if (v < 0) throw ntrn::ParseError("negative boundary level in token '" + tok + "'");
            events.push_back(ntrn::Event::boundary(static_cast<std::uint64_t>(v)));
        }
    }
    return events;
}

std::string format_events(const std::vector<ntrn::Event>& events, ntrn::Mapping mapping) {
    std::string out;
    for (const auto& e : events) {
        if (!out.empty()) out += ' ';
        if (e.kind == ntrn::Event::Kind::data) {
            out += 'D';
            if (mapping == ntrn::Mapping::balanced && e.trit.value > 0) out += '+';
            out += std::to_string(e.trit.value);
        } else {
            out += 'B';
            out += std::to_string(e.level);
        }
    }
    out += '\n';
    return out;
}

std::vector<ntrn::DualSymbol> parse_dual_symbols(const std::string& text) {
    std::vector<ntrn::DualSymbol> symbols;
    for (const std::string& tok : tokenize(text)) {
        if (tok[0] != 'A' && tok[0] != 'B')
            throw ntrn::ParseError("unrecognized dual token '" + tok +
                                   "' (want A<bits> or B<bits>)");
        ntrn::DualSymbol s;
        s.ns = tok[0] == 'A' ? ntrn::DualNamespace::a : ntrn::DualNamespace::b;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (tok[i] != '0' && tok[i] != '1')
                throw ntrn::ParseError("dual payload must be 0/1 bits in token '" + tok + "'");
            s.bits.push_back(static_cast<std::uint8_t>(tok[i] - '0'));
        }
        symbols.push_back(std::move(s));
    }
    return symbols;
}

std::string format_dual_symbols(const std::vector<ntrn::DualSymbol>& symbols) {
    std::string out;
    for (const auto& s : symbols) {
        if (!out.empty()) out += ' ';
        out += s.ns == ntrn::DualNamespace::a ? 'A' : 'B';
        for (std::uint8_t b : s.bits) out += static_cast<char>('0' + b);
    }
    out += '\n';
    return out;
}

// ---- number formatting (deterministic, no locale) ----

std::string fmt_num(double v) {
    char buf[64];
    if (std::isnan(v)) return "n/a";
    if (std::fabs(v) < 9e15 && std::fabs(v - std::round(v)) < 1e-9)
        std::snprintf(buf, sizeof buf, "%.0f", v);
    else
        std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_ratio(double v) {
    if (std::isnan(v)) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// ---- weight byte <-> trit ----

std::vector<ntrn::Trit> weights_from_bytes(const std::vector<std::uint8_t>& bytes,
                                           ntrn::Mapping mapping) {
    std::vector<ntrn::Trit> trits;
    trits.reserve(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        auto v = static_cast<std::int8_t>(bytes[i]);
        ntrn::Trit t{v};
        if (!ntrn::in_domain(t, mapping))
            throw ntrn::ArgumentError("weight byte at offset " + std::to_string(i) + " (value " +
                                      std::to_string(v) + ") outside the mapping domain");
        trits.push_back(t);
    }
    return trits;
}

std::vector<std::uint8_t> weights_to_bytes(const std::vector<ntrn::Trit>& trits) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(trits.size());
    for (ntrn::Trit t : trits) bytes.push_back(static_cast<std::uint8_t>(t.value));
    return bytes;
}

// ---- container layout detection (no header flag distinguishes model files;
// both readers are exact about sizes, so size arithmetic discriminates) ----

bool is_plain_layout(const std::vector<std::uint8_t>& file, const ntrn::ContainerHeader& header) {
    std::uint64_t remaining = file.size() - ntrn::container_header_size;
    return remaining == (header.payload_pair_count + 3) / 4;
}

// ---- subcommand bodies ----

struct CommonPaths {
    std::string in = "-";
    std::string out = "-";
};

void cmd_encode(const CommonPaths& paths, const SchemeFlags& flags) {
    auto raw = read_input(paths.in);
    std::string text(raw.begin(), raw.end());
    ntrn::SchemeConfig config = flags.config();
    ntrn::PairBuffer payload;
    if (config.variant == ntrn::Variant::single_delimiter) {
        auto events = parse_events(text);
        payload = ntrn::encode(events, config);
    } else {
        payload = ntrn::encode_dual(parse_dual_symbols(text));
    }
    write_output(paths.out, ntrn::write_container(payload, config));
}

void cmd_decode(const CommonPaths& paths) {
    auto file = read_input(paths.in);
    ntrn::ContainerView view = ntrn::read_container(file);
    if (view.config.variant == ntrn::Variant::single_delimiter) {
        auto events = ntrn::decode(view.payload, view.config);
        write_output(paths.out, format_events(events, view.config.mapping));
    } else {
        ntrn::DualDecodeResult result = ntrn::decode_dual(view.payload);
        if (result.skipped_prefix_pairs > 0)
            std::cerr << "note: skipped " << result.skipped_prefix_pairs
                      << " continuation pairs before the first starter\n";
        write_output(paths.out, format_dual_symbols(result.symbols));
    }
}

void cmd_transcode(const CommonPaths& paths, const SchemeFlags& flags, bool reverse) {
    const ntrn::TritBlockCodecParams params{};
    if (!reverse) {
        auto data = read_input(paths.in);
        auto trits = ntrn::binary_to_trits(data, params);
        ntrn::SchemeConfig config = flags.config();
        config.mapping = ntrn::Mapping::unsigned_ternary;  // digits are 0..2
        config.variant = ntrn::Variant::single_delimiter;
        ntrn::PairBuffer payload;
        payload.reserve_pairs(trits.size());
        ntrn::append_data_run(payload, trits, config);
        write_output(paths.out, ntrn::write_container(payload, config, data.size()));
        return;
    }
    auto file = read_input(paths.in);
    ntrn::ContainerView view = ntrn::read_container(file);
    if (!view.transcoded_length)
        throw ntrn::ArgumentError("container is not transcoded; use 'decode' instead");
    if (view.config.mapping != ntrn::Mapping::unsigned_ternary)
        throw ntrn::ArgumentError("transcoded containers use the unsigned mapping");
    if (view.config.variant != ntrn::Variant::single_delimiter)
        throw ntrn::ArgumentError("transcoded containers use the single-delimiter variant");
    std::vector<ntrn::Trit> trits;
    trits.reserve(view.payload.pair_count());
    bool saw_boundary = false;
    ntrn::for_each_event(view.payload, view.config, [&](const ntrn::Event& e) {
        if (e.kind == ntrn::Event::Kind::data)
            trits.push_back(e.trit);
        else
            saw_boundary = true;
    });
    if (saw_boundary)
        throw ntrn::CorruptionError("delimiter run inside a transcoded payload");
    std::uint64_t expected = ntrn::trit_count_for_length(*view.transcoded_length, params);
    if (trits.size() != expected)
        throw ntrn::CorruptionError("transcoded payload carries " + std::to_string(trits.size()) +
                                    " trits, declared length needs " + std::to_string(expected));
    auto bytes = ntrn::trits_to_binary(trits, *view.transcoded_length, params);
    write_output(paths.out, bytes);
}

void cmd_pack(const CommonPaths& paths, const SchemeFlags& flags, const std::string& manifest_path,
              const std::string& weights_path) {
    auto manifest_raw = read_input(manifest_path);
    auto manifest =
        ntrn::ModelManifest::from_json(std::string(manifest_raw.begin(), manifest_raw.end()));
    ntrn::SchemeConfig config = flags.config();
    auto weights = weights_from_bytes(read_input(weights_path), config.mapping);
    write_output(paths.out, ntrn::pack_model(manifest, weights, config));
}

void cmd_unpack(const CommonPaths& paths, const std::string& manifest_out) {
    auto file = read_input(paths.in);
    ntrn::UnpackedModel model = ntrn::unpack_model(file);
    write_output(paths.out, weights_to_bytes(model.weights));
    write_output(manifest_out, model.manifest.to_json() + "\n");
}

void cmd_inspect(const CommonPaths& paths) {
    auto file = read_input(paths.in);
    ntrn::ContainerHeader header = ntrn::read_header(file);

    std::ostringstream os;
    ntrn::PairBuffer payload;
    ntrn::SchemeConfig config = header.config;
    if (is_plain_layout(file, header)) {
        os << "container: plain\n";
        payload = ntrn::read_container(file).payload;
    } else {
        ntrn::ModelFileView view = ntrn::read_model_container(file);
        payload = std::move(view.payload);
        os << "container: model\n";
        os << "layers: " << view.manifest.layer_count() << "\n";
        os << "tensors: " << view.manifest.tensor_count() << "\n";
        os << "weights_declared: " << view.manifest.weight_count() << "\n";
        os << "manifest_bytes: " << view.manifest.to_json().size() << "\n";
    }
    os << "delimiter: " << ntrn::to_string(config.delimiter) << "\n";
    os << "mapping: "
       << (config.mapping == ntrn::Mapping::balanced ? "balanced" : "unsigned") << "\n";
    os << "variant: "
       << (config.variant == ntrn::Variant::single_delimiter ? "single" : "dual") << "\n";
    os << "transcoded: " << (header.transcoded ? "yes" : "no") << "\n";
    if (header.transcoded) {
        os << "original_byte_length: " << header.original_byte_length << "\n";
        os << "expected_trits: " << ntrn::trit_count_for_length(header.original_byte_length)
           << "\n";
    }
    os << "payload_pair_count: " << payload.pair_count() << "\n";
    os << "payload_bytes: " << payload.bytes().size() << "\n";

    if (config.variant == ntrn::Variant::single_delimiter) {
        std::uint64_t data_pairs = 0, boundary_events = 0, boundary_pairs = 0;
        std::map<std::uint64_t, std::uint64_t> census;
        ntrn::for_each_event(payload, config, [&](const ntrn::Event& e) {
            if (e.kind == ntrn::Event::Kind::data) {
                ++data_pairs;
            } else {
                ++boundary_events;
                boundary_pairs += e.level;
                ++census[e.level];
            }
        });
        os << "data_pairs: " << data_pairs << "\n";
        os << "boundary_events: " << boundary_events << "\n";
        os << "boundary_pairs: " << boundary_pairs << "\n";
        os << "boundary_bits: " << boundary_pairs * 2 << "\n";
        os << "boundary_bytes: " << fmt_num(static_cast<double>(boundary_pairs) * 2.0 / 8.0)
           << "\n";
        for (const auto& [level, count] : census)
            os << "boundary_level_" << level << ": " << count << "\n";
    } else {
        ntrn::DualDecodeResult result = ntrn::decode_dual(payload);
        os << "dual_symbols: " << result.symbols.size() << "\n";
        os << "skipped_prefix_pairs: " << result.skipped_prefix_pairs << "\n";
    }
    write_output(paths.out, os.str());
}

void cmd_corrupt(const CommonPaths& paths, std::uint64_t flips, std::uint64_t seed) {
    auto file = read_input(paths.in);
    ntrn::ContainerHeader header = ntrn::read_header(file);
    if (header.config.variant != ntrn::Variant::single_delimiter)
        throw ntrn::ArgumentError("corrupt requires a single-delimiter container");

    ntrn::PairBuffer payload = is_plain_layout(file, header)
                                   ? ntrn::read_container(file).payload
                                   : ntrn::read_model_container(file).payload;
    auto spec = ntrn::CorruptionSpec::random_bits(flips, seed, payload.bit_count());
    ntrn::PairBuffer corrupted = ntrn::inject(payload, spec);

    // payload sits at the file tail in both layouts; splice it in place
    std::vector<std::uint8_t> out_file = file;
    auto corrupted_bytes = corrupted.bytes();
    std::copy(corrupted_bytes.begin(), corrupted_bytes.end(),
              out_file.end() - static_cast<std::ptrdiff_t>(corrupted_bytes.size()));
    write_output(paths.out, out_file);

    auto original_events = ntrn::decode(payload, header.config);
    auto corrupted_events = ntrn::decode(corrupted, header.config);
    auto report = ntrn::classify(original_events, corrupted_events, spec.flipped_pairs(),
                                 header.config);
    std::ostringstream os;
    os << "flips: " << flips << "\n"
       << "seed: " << seed << "\n"
       << report.to_text();
    std::cout << os.str();
}

void cmd_bench(std::uint64_t scale, std::uint64_t seed) {
    ntrn::ThroughputReport report = ntrn::throughput_bench(scale, seed);
    std::printf("trits: %llu\n", static_cast<unsigned long long>(report.trits));
    std::printf("payload_bytes: %llu\n", static_cast<unsigned long long>(report.payload_bytes));
    std::printf("encode_mb_per_s: %.2f\n", report.encode_mb_per_s);
    std::printf("decode_mb_per_s: %.2f\n", report.decode_mb_per_s);
    std::printf("checksum: %llu\n", static_cast<unsigned long long>(report.checksum));
}

void cmd_analyze_density() {
    std::printf("single_delimiter_data_density: %.10f\n",
                ntrn::data_density(ntrn::Variant::single_delimiter));
    std::printf("dual_starter_data_density: %.10f\n",
                ntrn::data_density(ntrn::Variant::dual_starter));
    std::printf("log2_3: %.10f\n", std::log2(3.0));
    std::printf("block_transcode_expansion: %.9f\n", ntrn::expansion_factor());
    std::printf("ideal_transcode_expansion: %.9f\n", ntrn::ideal_expansion_factor());
}

void cmd_analyze_amortisation(const ntrn::TextShapeParams& p) {
    double per_word = 2.0 * p.word_level / p.chars_per_word;
    double per_sentence = 2.0 * p.sentence_level / (p.chars_per_word * p.words_per_sentence);
    double per_paragraph = 2.0 * p.paragraph_level /
                           (p.chars_per_word * p.words_per_sentence * p.sentences_per_paragraph);
    double total = ntrn::amortised_overhead(p);
    std::printf("chars_per_word: %g\n", p.chars_per_word);
    std::printf("words_per_sentence: %g\n", p.words_per_sentence);
    std::printf("sentences_per_paragraph: %g\n", p.sentences_per_paragraph);
    std::printf("word_bits_per_char: %.10g\n", per_word);
    std::printf("sentence_bits_per_char: %.10g\n", per_sentence);
    std::printf("paragraph_bits_per_char: %.10g\n", per_paragraph);
    std::printf("amortised_boundary_bits_per_char: %.10g\n", total);
}

void cmd_analyze_storage(std::uint64_t weights, std::uint64_t tensors, std::uint64_t layers) {
    ntrn::StorageComparison cmp = ntrn::storage_comparison(weights, tensors, layers);
    std::printf("weights: %llu\n", static_cast<unsigned long long>(weights));
    std::printf("tensors: %llu\n", static_cast<unsigned long long>(tensors));
    std::printf("layers: %llu\n", static_cast<unsigned long long>(layers));
    auto print_row = [](const ntrn::StorageRow& row) {
        std::printf("format: %s\n", row.name.c_str());
        std::printf("  bits_per_weight: %g\n", row.bits_per_weight);
        std::printf("  payload_bytes: %s\n", fmt_num(row.payload_bytes).c_str());
        std::printf("  overhead_bytes: %s\n", fmt_num(row.overhead_bytes).c_str());
        std::printf("  total_bytes: %s\n", fmt_num(row.total_bytes).c_str());
        std::printf("  size_ratio: %s\n", fmt_ratio(row.size_ratio).c_str());
        std::printf("  overhead_ratio: %s\n", fmt_ratio(row.overhead_ratio).c_str());
    };
    print_row(cmp.native);
    for (const auto& row : cmp.models) print_row(row);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NativeTernary self-delimiting ternary codec"};
    app.require_subcommand(1);

    CommonPaths paths;
    SchemeFlags flags;
    std::string manifest_path;
    std::string weights_path;
    std::string manifest_out = "-";
    bool reverse = false;
    std::uint64_t flips = 1, seed = 0, scale = 1000000;
    std::uint64_t an_weights = 1000000, an_tensors = 170, an_layers = 24;
    ntrn::TextShapeParams shape;
    std::string analyze_what;

    auto* c_encode = app.add_subcommand("encode", "event text -> container");
    c_encode->add_option("--in", paths.in, "input path or -");
    c_encode->add_option("--out", paths.out, "output path or -");
    add_scheme_options(c_encode, flags);

    auto* c_decode = app.add_subcommand("decode", "container -> event text");
    c_decode->add_option("--in", paths.in, "input path or -");
    c_decode->add_option("--out", paths.out, "output path or -");

    auto* c_transcode =
        app.add_subcommand("transcode", "binary <-> transcoded container (base-3 blocks)");
    c_transcode->add_option("--in", paths.in, "input path or -");
    c_transcode->add_option("--out", paths.out, "output path or -");
    c_transcode->add_flag("--decode", reverse, "container -> binary instead of binary -> container");
    add_scheme_options(c_transcode, flags, /*with_variant=*/false, /*with_mapping=*/false);

    auto* c_pack = app.add_subcommand("pack", "manifest + weight bytes -> model container");
    c_pack->add_option("--manifest", manifest_path, "manifest JSON path")->required();
    c_pack->add_option("--weights", weights_path, "weight bytes path or -")->required();
    c_pack->add_option("--out", paths.out, "output path or -");
    add_scheme_options(c_pack, flags, /*with_variant=*/false);

    auto* c_unpack = app.add_subcommand("unpack", "model container -> manifest + weight bytes");
    c_unpack->add_option("--in", paths.in, "input path or -");
    c_unpack->add_option("--out", paths.out, "weight bytes path or -")->required();
    c_unpack->add_option("--manifest", manifest_out, "manifest JSON output path or -");

    auto* c_inspect = app.add_subcommand("inspect", "report header fields and boundary census");
    c_inspect->add_option("--in", paths.in, "input path or -");
    c_inspect->add_option("--out", paths.out, "output path or -");

    auto* c_corrupt =
        app.add_subcommand("corrupt", "flip payload bits, write corrupted container, report");
    c_corrupt->add_option("--in", paths.in, "input path or -");
    c_corrupt->add_option("--out", paths.out, "corrupted container path")->required();
    c_corrupt->add_option("--flips", flips, "number of distinct bit flips");
    c_corrupt->add_option("--seed", seed, "flip position seed");

    auto* c_bench = app.add_subcommand("bench", "seeded single-thread throughput measurement");
    c_bench->add_option("--scale", scale, "trit count");
    c_bench->add_option("--seed", seed, "data seed");

    auto* c_analyze = app.add_subcommand("analyze", "density / amortisation / storage arithmetic");
    c_analyze->add_option("what", analyze_what, "density|amortisation|storage")
        ->required()
        ->check(CLI::IsMember({"density", "amortisation", "storage"}));
    c_analyze->add_option("--chars-per-word", shape.chars_per_word, "");
    c_analyze->add_option("--words-per-sentence", shape.words_per_sentence, "");
    c_analyze->add_option("--sentences-per-paragraph", shape.sentences_per_paragraph, "");
    c_analyze->add_option("--word-level", shape.word_level, "");
    c_analyze->add_option("--sentence-level", shape.sentence_level, "");
    c_analyze->add_option("--paragraph-level", shape.paragraph_level, "");
    c_analyze->add_option("--weights", an_weights, "weight count");
    c_analyze->add_option("--tensors", an_tensors, "tensor count");
    c_analyze->add_option("--layers", an_layers, "layer count");

    try {
        app.parse(argc, argv);
        if (*c_encode) cmd_encode(paths, flags);
        if (*c_decode) cmd_decode(paths);
        if (*c_transcode) cmd_transcode(paths, flags, reverse);
        if (*c_pack) cmd_pack(paths, flags, manifest_path, weights_path);
        if (*c_unpack) cmd_unpack(paths, manifest_out);
        if (*c_inspect) cmd_inspect(paths);
        if (*c_corrupt) cmd_corrupt(paths, flips, seed);
        if (*c_bench) cmd_bench(scale, seed);
        if (*c_analyze) {
            if (analyze_what == "density") cmd_analyze_density();
            if (analyze_what == "amortisation") cmd_analyze_amortisation(shape);
            if (analyze_what == "storage") cmd_analyze_storage(an_weights, an_tensors, an_layers);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    } catch (const ntrn::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ntrn::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ntrn::CorruptionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
