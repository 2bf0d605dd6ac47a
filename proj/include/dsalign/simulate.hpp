#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dsalign/dstring.hpp"

namespace dsalign {

/*
 * Seeded generators for synthetic inputs: random D-strings, ground-truth
 * members, and SNP/INDEL divergence. Everything is a pure function of its
 * seed so runs are bit-reproducible.
 */

/// SplitMix64: state advances by the golden-ratio constant, output is the
/// finalizer of Stafford's Mix13. Bounded draws use the 128-bit
/// multiply-shift reduction, so any implementation of this exact algorithm
/// reproduces the streams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n).
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    std::uint64_t state_;
};

/// Parameters of the random D-string generator.
struct SimSpec {
    std::size_t width = 0;       // W
    double degeneracy = 0.0;     // g: fraction of W turned into degenerate letters
    std::size_t max_variants = 2;  // S
    std::size_t max_len = 1;       // L
    std::uint64_t seed = 0;

    void validate() const {
        if (width == 0) throw std::invalid_argument("width must be positive");
        if (degeneracy < 0.0 || degeneracy > 1.0) throw std::invalid_argument("degeneracy must be in [0,1]");
        if (max_variants < 2) throw std::invalid_argument("max variant count must be >= 2");
        if (max_len < 1) throw std::invalid_argument("max variant length must be >= 1");
        if (degeneracy * static_cast<double>(width) * static_cast<double>(max_len) >
            static_cast<double>(width)) {
            throw std::invalid_argument("degenerate windows cannot fit: g*W*L > W");
        }
    }
};

struct SnpEvent {
    std::size_t pos;
    char from, to;
};

struct SnpResult {
    std::string pattern;
    std::vector<SnpEvent> events;  // one per drawn position, in position order
    std::size_t changed = 0;       // draws that actually altered the base
};

struct IndelEvent {
    std::size_t pos;     // position in the unmutated pattern
    bool insertion;
    std::string bases;   // inserted bases, or the deleted substring
};

struct IndelResult {
    std::string pattern;
    std::vector<IndelEvent> events;
    std::size_t inserted_bases = 0;
    std::size_t deleted_bases = 0;
};

namespace detail {

/// Uniform placement of `count` windows of the given lengths into span
/// positions [0, span), keeping at least `margin` free positions between
/// windows. The free slack is split into a uniformly random composition of
/// count+1 gaps (stars and bars over a sorted distinct sample), so windows
/// scatter evenly instead of bunching. Throws when they cannot fit.
inline std::vector<std::size_t> place_windows(SplitMix64& rng, std::size_t span,
                                              const std::vector<std::size_t>& lengths,
                                              std::size_t margin) {
    const std::size_t count = lengths.size();
    if (count == 0) return {};
    std::size_t need = 0;
    for (std::size_t i = 0; i < count; ++i) {
        need += lengths[i] + (i > 0 ? margin : 0);
    }
    if (need > span) throw std::invalid_argument("windows cannot be placed in the given width");
    const std::size_t slack = span - need;

    // sorted distinct sample of `count` values from [0, slack + count),
    // drawn by Fisher-Yates over a virtual index array
    const std::size_t range = slack + count;
    std::unordered_map<std::size_t, std::size_t> moved;
    std::vector<std::size_t> sample(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.bounded(range - i);
        const auto it_i = moved.find(i);
        const std::size_t vi = it_i != moved.end() ? it_i->second : i;
        const auto it_j = moved.find(j);
        const std::size_t vj = it_j != moved.end() ? it_j->second : j;
        sample[i] = vj;
        moved[j] = vi;
    }
    std::sort(sample.begin(), sample.end());

    std::vector<std::size_t> starts;
    starts.reserve(count);
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t gap = sample[i] - i - (i > 0 ? sample[i - 1] - (i - 1) : 0);
        cursor += gap + (i > 0 ? margin : 0);
        starts.push_back(cursor);
        cursor += lengths[i];
    }
    return starts;
}

}  // namespace detail

/// Random D-string of width exactly spec.width: a uniform base string with
/// round(g*W) non-overlapping, non-adjacent windows replaced by degenerate
/// letters. Variant 0 of each letter is the original substring; the others
/// are distinct uniform strings of the same length, so the width never
/// changes and the base string stays a member.
inline DString generate_dstring(const SimSpec& spec, std::string_view alphabet = kDnaAlphabet) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    const std::size_t w = spec.width;

    std::string base;
    base.reserve(w);
    for (std::size_t i = 0; i < w; ++i) base.push_back(alphabet[rng.bounded(alphabet.size())]);

    const auto n_deg = static_cast<std::size_t>(std::llround(spec.degeneracy * static_cast<double>(w)));
    std::vector<std::size_t> lengths(n_deg);
    for (auto& l : lengths) l = 1 + rng.bounded(spec.max_len);
    std::vector<std::size_t> starts = detail::place_windows(rng, w, lengths, 1);

    std::vector<DegenerateLetter> letters;
    std::size_t at = 0;
    for (std::size_t i = 0; i < n_deg; ++i) {
        for (; at < starts[i]; ++at) letters.push_back({{std::string(1, base[at])}});
        const std::size_t ell = lengths[i];
        // the alphabet bounds how many distinct variants of this length exist
        std::size_t limit = 1;
        for (std::size_t j = 0; j < ell && limit <= spec.max_variants; ++j) limit *= alphabet.size();
        const std::size_t s = std::min(2 + rng.bounded(spec.max_variants - 1), limit);
        std::vector<std::string> variants{base.substr(at, ell)};
        while (variants.size() < s) {
            std::string v;
            for (std::size_t j = 0; j < ell; ++j) v.push_back(alphabet[rng.bounded(alphabet.size())]);
            if (std::find(variants.begin(), variants.end(), v) == variants.end()) {
                variants.push_back(std::move(v));
            }
        }
        letters.push_back({std::move(variants)});
        at += ell;
    }
    for (; at < w; ++at) letters.push_back({{std::string(1, base[at])}});
    return DString(std::move(letters));
}

/// One member drawn uniformly per letter.
inline std::string extract_member(const DString& ds, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::string out;
    out.reserve(ds.width());
    for (const auto& l : ds.letters()) {
        out += l.variants[rng.bounded(l.s())];
    }
    return out;
}

/// Substitute round(rate*|p0|) distinct positions with bases drawn from the
/// full alphabet; a draw may reproduce the original base, so `changed`
/// reports the effective substitutions.
inline SnpResult mutate_snps(std::string_view p0, double rate, std::uint64_t seed,
                             std::string_view alphabet = kDnaAlphabet) {
    if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("snp rate must be in [0,1]");
    const auto count = static_cast<std::size_t>(std::llround(rate * static_cast<double>(p0.size())));
    SplitMix64 rng(seed);

    // partial Fisher-Yates for distinct positions
    std::vector<std::size_t> idx(p0.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
        std::swap(idx[i], idx[i + rng.bounded(idx.size() - i)]);
    }
    std::vector<std::size_t> positions(idx.begin(), idx.begin() + count);
    std::sort(positions.begin(), positions.end());

    SnpResult res;
    res.pattern = std::string(p0);
    for (std::size_t pos : positions) {
        const char to = alphabet[rng.bounded(alphabet.size())];
        res.events.push_back({pos, p0[pos], to});
        if (to != p0[pos]) ++res.changed;
        res.pattern[pos] = to;
    }
    return res;
}

/// Apply round(rate*|p0|) indel events at well-separated positions. Each
/// event is an insertion or deletion with probability 1/2 and length 1-3.
/// The separation keeps planted gap runs from touching, so an optimal
/// alignment sees exactly one gap per event.
inline IndelResult mutate_indels(std::string_view p0, double rate, std::uint64_t seed,
                                 std::string_view alphabet = kDnaAlphabet) {
    if (rate < 0.0 || rate > 1.0) throw std::invalid_argument("indel rate must be in [0,1]");
    constexpr std::size_t kMaxLen = 3;
    // events this far apart cannot profitably merge into one gap run, so an
    // optimal alignment reports exactly one gap per event
    constexpr std::size_t kMargin = 16;
    const auto count = static_cast<std::size_t>(std::llround(rate * static_cast<double>(p0.size())));
    SplitMix64 rng(seed);

    IndelResult res;
    if (count == 0) {
        res.pattern = std::string(p0);
        return res;
    }
    if (p0.size() < kMaxLen) throw std::invalid_argument("pattern too short for indel events");
    std::vector<std::size_t> lengths(count, 1);
    std::vector<std::size_t> positions =
        detail::place_windows(rng, p0.size() - kMaxLen + 1, lengths, kMargin);

    for (std::size_t pos : positions) {
        IndelEvent ev;
        ev.pos = pos;
        ev.insertion = rng.bounded(2) == 0;
        const std::size_t len = 1 + rng.bounded(kMaxLen);
        if (ev.insertion) {
            for (std::size_t j = 0; j < len; ++j) ev.bases.push_back(alphabet[rng.bounded(alphabet.size())]);
            res.inserted_bases += len;
        } else {
            ev.bases = std::string(p0.substr(pos, len));
            res.deleted_bases += len;
        }
        res.events.push_back(std::move(ev));
    }

    // assemble left to right; positions index the original pattern
    std::string out;
    out.reserve(p0.size() + res.inserted_bases);
    std::size_t at = 0;
    for (const auto& ev : res.events) {
        out += p0.substr(at, ev.pos - at);
        at = ev.pos;
        if (ev.insertion) {
            out += ev.bases;
        } else {
            at += ev.bases.size();  // skip the deleted span
        }
    }
    out += p0.substr(at);
    res.pattern = std::move(out);
    return res;
}

}  // namespace dsalign
