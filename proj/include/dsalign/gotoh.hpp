#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "dsalign/events.hpp"
#include "dsalign/penalties.hpp"

namespace dsalign {

/*
 * Three-matrix affine-gap global alignment of two plain strings (Gotoh).
 * Matrices M, D, I hold the best score of an alignment prefix ending in a
 * (mis)match, a deletion (text consumed), or an insertion (pattern
 * consumed). Minimization throughout; ties in traceback prefer (mis)match,
 * then deletion, then insertion, and gap extension over gap opening.
 */

struct GotohResult {
    long distance = 0;
    EventList events;
};

inline GotohResult gotoh_align(std::string_view text, std::string_view pattern, const Penalties& pen) {
    pen.validate();
    if (text.empty() || pattern.empty()) {
        throw std::invalid_argument("gotoh_align requires non-empty inputs");
    }
    const std::size_t n = text.size();
    const std::size_t m = pattern.size();
    constexpr long kInf = std::numeric_limits<long>::max() / 4;

    auto idx = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
    std::vector<long> M((n + 1) * (m + 1), kInf);
    std::vector<long> D((n + 1) * (m + 1), kInf);
    std::vector<long> I((n + 1) * (m + 1), kInf);

    M[idx(0, 0)] = 0;
    for (std::size_t i = 1; i <= n; ++i) D[idx(i, 0)] = pen.gap(static_cast<long>(i));
    for (std::size_t j = 1; j <= m; ++j) I[idx(0, j)] = pen.gap(static_cast<long>(j));

    auto best = [&](std::size_t i, std::size_t j) {
        const std::size_t k = idx(i, j);
        return std::min(M[k], std::min(D[k], I[k]));
    };

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t k = idx(i, j);
            const long sub = text[i - 1] == pattern[j - 1] ? pen.a : pen.x;
            M[k] = best(i - 1, j - 1) + sub;
            D[k] = std::min(D[idx(i - 1, j)] + pen.e, best(i - 1, j) + pen.o + pen.e);
            I[k] = std::min(I[idx(i, j - 1)] + pen.e, best(i, j - 1) + pen.o + pen.e);
        }
    }

    GotohResult res;
    res.distance = best(n, m);

    // traceback, events collected in reverse
    enum Comp { CM, CD, CI };
    auto pick = [&](std::size_t i, std::size_t j) {
        const std::size_t k = idx(i, j);
        const long b = std::min(M[k], std::min(D[k], I[k]));
        if (M[k] == b) return CM;
        if (D[k] == b) return CD;
        return CI;
    };

    EventList rev;
    std::size_t i = n, j = m;
    Comp comp = pick(n, m);
    while (i > 0 || j > 0) {
        if (comp == CM) {
            push_event(rev, text[i - 1] == pattern[j - 1] ? EventOp::Match : EventOp::Mismatch);
            --i, --j;
            comp = (i == 0 && j == 0) ? CM : pick(i, j);
        } else if (comp == CD) {
            push_event(rev, EventOp::Deletion);
            const long val = D[idx(i, j)];
            --i;
            if (i > 0 && D[idx(i, j)] + pen.e == val) {
                comp = CD;
            } else if (i == 0 && j == 0) {
                break;
            } else {
                comp = pick(i, j);
            }
        } else {
            push_event(rev, EventOp::Insertion);
            const long val = I[idx(i, j)];
            --j;
            if (j > 0 && I[idx(i, j)] + pen.e == val) {
                comp = CI;
            } else if (i == 0 && j == 0) {
                break;
            } else {
                comp = pick(i, j);
            }
        }
    }

    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        push_event(res.events, it->op, it->len);
    }
    return res;
}

}  // namespace dsalign
