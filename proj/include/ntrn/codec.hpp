#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ntrn/pair_buffer.hpp"
#include "ntrn/scheme.hpp"

namespace ntrn {

// One decoded item: either a data trit or a boundary of some level.
// Level N on the wire is a run of exactly N delimiter pairs, so adjacent
// boundary events cannot survive a decode (runs are maximal) and the encoder
// rejects them on input to keep encode/decode mutually inverse.
struct Event {
    enum class Kind : std::uint8_t { data, boundary };

    Kind kind = Kind::data;
    Trit trit{};               // meaningful when kind == data
    std::uint64_t level = 0;   // meaningful when kind == boundary

    static Event data(Trit t) { return Event{Kind::data, t, 0}; }
    static Event boundary(std::uint64_t level) { return Event{Kind::boundary, Trit{}, level}; }

    friend constexpr bool operator==(const Event&, const Event&) = default;
};

// Bulk appenders; encode() dispatches to these and pack/bench reuse them.
void append_data_run(PairBuffer& out, std::span<const Trit> trits, const SchemeConfig& config);
void append_boundary(PairBuffer& out, std::uint64_t level, const SchemeConfig& config);

PairBuffer encode(std::span<const Event> events, const SchemeConfig& config);

// Decoding is total: every (bytes, pair_count) input yields an event list.
// Delimiter runs are consumed maximally, including a run cut off by
// end-of-stream, which still emits its accumulated level.
std::vector<Event> decode(const PairBuffer& buffer, const SchemeConfig& config);

// Visitor-form decode, same semantics as decode() without materializing the
// event vector. emit is called with each Event in stream order.
template <typename F>
void for_each_event(const PairBuffer& buffer, const SchemeConfig& config, F&& emit) {
    if (config.variant != Variant::single_delimiter)
        throw ArgumentError("single-delimiter decode requires variant=single");
    const auto domain = trit_domain(config.mapping);
    Trit by_pair[4] = {};
    for (std::uint8_t v = 0, rank = 0; v < 4; ++v)
        if (v != config.delimiter.value) by_pair[v] = domain[rank++];

    const std::uint8_t delim = config.delimiter.value;
    std::uint64_t run = 0;
    const std::uint64_t n = buffer.pair_count();
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint8_t v = buffer.pair(i).value;
        if (v == delim) {
            ++run;
        } else {
            if (run != 0) {
                emit(Event::boundary(run));
                run = 0;
            }
            emit(Event::data(by_pair[v]));
        }
    }
    if (run != 0) emit(Event::boundary(run));
}

}  // namespace ntrn
