#include "ntrn/channel.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_set>

#include "ntrn/errors.hpp"

namespace ntrn {

namespace {

// std::mt19937_64 output is bit-exact everywhere; the standard distributions
// are not, so reduce ranges by hand.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

}  // namespace

CorruptionSpec CorruptionSpec::at_bits(std::vector<std::uint64_t> bits) {
    return CorruptionSpec{std::move(bits)};
}

CorruptionSpec CorruptionSpec::random_bits(std::uint64_t flip_count, std::uint64_t seed,
                                           std::uint64_t total_bits) {
    if (flip_count > total_bits)
        throw ArgumentError("cannot pick " + std::to_string(flip_count) +
                            " distinct bits from a " + std::to_string(total_bits) +
                            "-bit payload");
    // Floyd's sampling: k distinct values, deterministic draw order
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(flip_count));
    CorruptionSpec spec;
    spec.flip_bits.reserve(static_cast<std::size_t>(flip_count));
    for (std::uint64_t j = total_bits - flip_count; j < total_bits; ++j) {
        std::uint64_t t = below(rng, j + 1);
        std::uint64_t pick = chosen.insert(t).second ? t : j;
        if (pick != t) chosen.insert(pick);
        spec.flip_bits.push_back(pick);
    }
    std::sort(spec.flip_bits.begin(), spec.flip_bits.end());
    return spec;
}

std::vector<std::uint64_t> CorruptionSpec::flipped_pairs() const {
    std::vector<std::uint64_t> pairs;
    pairs.reserve(flip_bits.size());
    for (std::uint64_t b : flip_bits) pairs.push_back(b >> 1);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

PairBuffer inject(const PairBuffer& buffer, const CorruptionSpec& spec) {
    for (std::uint64_t b : spec.flip_bits)
        if (b >= buffer.bit_count())
            throw ArgumentError("flip position " + std::to_string(b) +
                                " out of range (payload has " +
                                std::to_string(buffer.bit_count()) + " bits)");
    PairBuffer out = buffer;
    for (std::uint64_t b : spec.flip_bits) out.flip_bit(b);
    return out;
}

std::optional<double> CorruptionReport::mean_resync_distance() const {
    if (resync_events == 0) return std::nullopt;
    return static_cast<double>(total_resync_distance) / static_cast<double>(resync_events);
}

CorruptionReport& CorruptionReport::operator+=(const CorruptionReport& other) {
    false_boundaries += other.false_boundaries;
    lost_or_split_boundaries += other.lost_or_split_boundaries;
    value_flips += other.value_flips;
    value_error_magnitude += other.value_error_magnitude;
    corrupted_pairs += other.corrupted_pairs;
    resync_events += other.resync_events;
    diverged_without_resync += other.diverged_without_resync;
    total_resync_distance += other.total_resync_distance;
    return *this;
}

std::string CorruptionReport::to_text() const {
    std::ostringstream os;
    os << "false_boundaries: " << false_boundaries << "\n"
       << "lost_or_split_boundaries: " << lost_or_split_boundaries << "\n"
       << "value_flips: " << value_flips << "\n"
       << "value_error_magnitude: " << value_error_magnitude << "\n"
       << "corrupted_pairs: " << corrupted_pairs << "\n"
       << "resync_events: " << resync_events << "\n"
       << "diverged_without_resync: " << diverged_without_resync << "\n";
    if (auto mean = mean_resync_distance())
        os << "mean_resync_distance: " << *mean << "\n";
    else
        os << "mean_resync_distance: n/a\n";
    return os.str();
}

CorruptionReport classify(std::span<const Event> original, std::span<const Event> corrupted,
                          std::span<const std::uint64_t> flipped_pairs,
                          const SchemeConfig& config) {
    // both sequences come from decode, so re-encoding reproduces the exact
    // pair streams the flips were applied to
    PairBuffer orig_pairs = encode(original, config);
    PairBuffer corr_pairs = encode(corrupted, config);
    if (orig_pairs.pair_count() != corr_pairs.pair_count())
        throw ArgumentError("event sequences flatten to different pair counts (" +
                            std::to_string(orig_pairs.pair_count()) + " vs " +
                            std::to_string(corr_pairs.pair_count()) +
                            "); bit flips preserve length");

    CorruptionReport report;
    for (std::uint64_t idx : flipped_pairs) {
        if (idx >= orig_pairs.pair_count())
            throw ArgumentError("flipped pair index " + std::to_string(idx) + " out of range");
        BitPair before = orig_pairs.pair(idx);
        BitPair after = corr_pairs.pair(idx);
        if (before == after) continue;  // caller listed a pair the flips cancelled out on
        ++report.corrupted_pairs;
        bool was_delim = before == config.delimiter;
        bool is_delim = after == config.delimiter;
        if (!was_delim && is_delim) {
            ++report.false_boundaries;
        } else if (was_delim && !is_delim) {
            ++report.lost_or_split_boundaries;
        } else {
            ++report.value_flips;
            int dv = pair_to_trit(after, config).value - pair_to_trit(before, config).value;
            report.value_error_magnitude += static_cast<std::uint64_t>(dv < 0 ? -dv : dv);
        }
    }

    // divergence and realignment over the event streams
    std::size_t no = original.size(), nc = corrupted.size();
    std::size_t d = 0;
    while (d < no && d < nc && original[d] == corrupted[d]) ++d;
    if (d == no && d == nc) return report;  // streams identical

    std::size_t max_s = std::min(no, nc) - d;
    std::size_t s = 0;
    while (s < max_s && original[no - 1 - s] == corrupted[nc - 1 - s]) ++s;
    if (s > 0) {
        // realigned: distance counts corrupted events between the divergence
        // and the start of the agreeing suffix
        ++report.resync_events;
        report.total_resync_distance += (nc - s) - d;
    } else {
        ++report.diverged_without_resync;
    }
    return report;
}

double VulnerabilityEstimate::rate() const {
    if (samples == 0) return std::numeric_limits<double>::quiet_NaN();
    return static_cast<double>(false_boundaries) / static_cast<double>(samples);
}

VulnerabilityEstimate vulnerability_rate(const SchemeConfig& config, std::uint64_t trials,
                                         std::uint64_t flips_per_trial, std::uint64_t seed) {
    const auto symbols = data_symbols(config);  // also rejects dual-starter configs
    VulnerabilityEstimate est;
    if (trials == 0 || flips_per_trial == 0) return est;

    std::mt19937_64 rng(seed);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        // one uniform random data pair per flip, each flipped in one bit
        PairBuffer buffer;
        buffer.reserve_pairs(flips_per_trial);
        for (std::uint64_t i = 0; i < flips_per_trial; ++i)
            buffer.append(symbols[below(rng, 3)]);
        CorruptionSpec spec;
        spec.flip_bits.reserve(flips_per_trial);
        for (std::uint64_t i = 0; i < flips_per_trial; ++i)
            spec.flip_bits.push_back(2 * i + (rng() & 1));
        PairBuffer corrupted = inject(buffer, spec);
        for (std::uint64_t i = 0; i < flips_per_trial; ++i)
            if (corrupted.pair(i) == config.delimiter) ++est.false_boundaries;
        est.samples += flips_per_trial;
    }
    return est;
}

}  // namespace ntrn
