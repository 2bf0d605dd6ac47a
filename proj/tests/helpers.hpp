#pragma once

// Shared test utilities: small random instance generators and independent
// reference implementations used as oracles. These are deliberately written
// against the plainest possible formulations so they share no code with the
// library paths they check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dsalign/dstring.hpp"
#include "dsalign/penalties.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline char random_base(Rng& rng) {
    static const char bases[] = "ACGT";
    return bases[rng() % 4];
}

inline std::string random_string(Rng& rng, std::size_t len) {
    std::string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(random_base(rng));
    return s;
}

/// Random D-string with roughly deg_percent% of letters degenerate.
/// Variant counts in [2, max_s], variant lengths in [1, max_l].
inline dsalign::DString random_dstring(Rng& rng, std::size_t target_width, int deg_percent,
                                       std::size_t max_s, std::size_t max_l) {
    std::vector<dsalign::DegenerateLetter> letters;
    std::size_t w = 0;
    while (w < target_width) {
        const bool degenerate = (rng() % 100) < static_cast<std::uint64_t>(deg_percent);
        if (!degenerate || target_width - w < 1) {
            letters.push_back({{std::string(1, random_base(rng))}});
            w += 1;
            continue;
        }
        const std::size_t ell = 1 + rng() % std::min(max_l, target_width - w);
        // distinct variants; alphabet bounds the count for short variants
        std::size_t smax = 1;
        for (std::size_t i = 0; i < ell && smax <= max_s; ++i) smax *= 4;
        const std::size_t s = 2 + rng() % (std::min(max_s, std::max<std::size_t>(smax, 2)) - 1);
        std::vector<std::string> variants;
        while (variants.size() < s) {
            std::string v = random_string(rng, ell);
            if (std::find(variants.begin(), variants.end(), v) == variants.end()) {
                variants.push_back(std::move(v));
            }
        }
        letters.push_back({std::move(variants)});
        w += ell;
    }
    return dsalign::DString(std::move(letters));
}

/// Pick one member of ds uniformly at random.
inline std::string random_member(Rng& rng, const dsalign::DString& ds) {
    std::string out;
    out.reserve(ds.width());
    for (const auto& l : ds.letters()) {
        out += l.variants[rng() % l.s()];
    }
    return out;
}

/// Apply up to n_snps substitutions and n_indels short indels to s.
inline std::string perturb(Rng& rng, std::string s, int n_snps, int n_indels) {
    for (int i = 0; i < n_snps && !s.empty(); ++i) {
        s[rng() % s.size()] = random_base(rng);
    }
    for (int i = 0; i < n_indels; ++i) {
        const std::size_t len = 1 + rng() % 2;
        if (rng() % 2 == 0 && s.size() > len) {
            const std::size_t pos = rng() % (s.size() - len);
            s.erase(pos, len);
        } else {
            const std::size_t pos = rng() % (s.size() + 1);
            std::string ins;
            for (std::size_t j = 0; j < len; ++j) ins.push_back(random_base(rng));
            s.insert(pos, ins);
        }
    }
    if (s.empty()) s = random_string(rng, 1);
    return s;
}

/// Plain linear-gap Needleman-Wunsch distance (match a, mismatch x, gap g).
inline long nw_linear(std::string_view t, std::string_view p, int a, int x, int g) {
    const std::size_t n = t.size(), m = p.size();
    std::vector<long> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<long>(j) * g;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<long>(i) * g;
        for (std::size_t j = 1; j <= m; ++j) {
            const long sub = t[i - 1] == p[j - 1] ? a : x;
            cur[j] = std::min({prev[j - 1] + sub, prev[j] + g, cur[j - 1] + g});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

/// Minimum over all members of the linear-gap NW distance; the independent
/// check for poa_align_linear.
inline long min_member_nw(const dsalign::DString& ds, std::string_view p, int a, int x, int g) {
    long best = std::numeric_limits<long>::max();
    for (const std::string& member : dsalign::members(ds, 1u << 20)) {
        best = std::min(best, nw_linear(member, p, a, x, g));
    }
    return best;
}

/// Exhaustive affine-gap alignment search by enumerating move sequences.
/// Exponential; only for very short strings.
inline long brute_affine(std::string_view t, std::string_view p, const dsalign::Penalties& pen) {
    long best = std::numeric_limits<long>::max();
    // moves: 0 = diagonal, 1 = delete (consume t), 2 = insert (consume p)
    struct Frame {
        std::size_t i, j;
        int last;  // -1 none, 1 delete-run, 2 insert-run
        long cost;
    };
    std::vector<Frame> stack{{0, 0, -1, 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.cost >= best) continue;
        if (f.i == t.size() && f.j == p.size()) {
            best = f.cost;
            continue;
        }
        if (f.i < t.size() && f.j < p.size()) {
            const long sub = t[f.i] == p[f.j] ? pen.a : pen.x;
            stack.push_back({f.i + 1, f.j + 1, -1, f.cost + sub});
        }
        if (f.i < t.size()) {
            const long step = pen.e + (f.last == 1 ? 0 : pen.o);
            stack.push_back({f.i + 1, f.j, 1, f.cost + step});
        }
        if (f.j < p.size()) {
            const long step = pen.e + (f.last == 2 ? 0 : pen.o);
            stack.push_back({f.i, f.j + 1, 2, f.cost + step});
        }
    }
    return best;
}

}  // namespace testutil
