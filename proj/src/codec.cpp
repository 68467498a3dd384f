#include "ntrn/codec.hpp"

namespace ntrn {

void append_data_run(PairBuffer& out, std::span<const Trit> trits, const SchemeConfig& config) {
    const auto symbols = data_symbols(config);
    const int lo = (config.mapping == Mapping::balanced) ? -1 : 0;
    for (Trit t : trits) {
        int rank = t.value - lo;
        if (rank < 0 || rank > 2)
            throw ArgumentError("trit value " + std::to_string(t.value) + " outside mapping domain");
        out.append(symbols[static_cast<unsigned>(rank)]);
    }
}

void append_boundary(PairBuffer& out, std::uint64_t level, const SchemeConfig& config) {
    if (config.variant != Variant::single_delimiter)
        throw ArgumentError("boundary runs require a single-delimiter scheme");
    if (level < 1) throw ArgumentError("boundary level must be >= 1");
    out.append_run(config.delimiter, level);
}

PairBuffer encode(std::span<const Event> events, const SchemeConfig& config) {
    if (config.variant != Variant::single_delimiter)
        throw ArgumentError("encode requires variant=single");
    PairBuffer out;
    out.reserve_pairs(events.size());
    bool prev_boundary = false;
    for (const Event& e : events) {
        if (e.kind == Event::Kind::data) {
            out.append(trit_to_pair(e.trit, config));
            prev_boundary = false;
        } else {
            if (prev_boundary)
                throw ArgumentError("consecutive boundary events would merge into one run; coalesce them first");
            append_boundary(out, e.level, config);
            prev_boundary = true;
        }
    }
    return out;
}

std::vector<Event> decode(const PairBuffer& buffer, const SchemeConfig& config) {
    std::vector<Event> events;
    events.reserve(buffer.pair_count());
    for_each_event(buffer, config, [&](const Event& e) { events.push_back(e); });
    return events;
}

}  // namespace ntrn
