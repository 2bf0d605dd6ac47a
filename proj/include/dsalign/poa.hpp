#pragma once

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "dsalign/dstring.hpp"

namespace dsalign {

/*
 * Partial-order DP alignment of a pattern against a D-string with a flat
 * gap cost g. One row per width position; rows inside a degenerate letter
 * hold a score tuple with one slot per variant. Within a letter all three
 * recurrence branches are slot-wise; at a letter boundary the diagonal and
 * vertical branches take the min across the previous row's tuple.
 */

/// Score table of the linear-gap tuple DP: (W+1) x (m+1) cells, each a tuple
/// whose arity is the variant count of the letter covering that row.
class TupleDpTable {
public:
    TupleDpTable(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::vector<long>& at(std::size_t u, std::size_t v) { return cells_[u * cols_ + v]; }
    const std::vector<long>& at(std::size_t u, std::size_t v) const { return cells_[u * cols_ + v]; }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<long>> cells_;
};

struct PoaResult {
    long distance = 0;
    TupleDpTable table{0, 0};
};

inline PoaResult poa_align_linear(const DString& ds, std::string_view pattern, int a, int x, int g) {
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    const std::size_t W = ds.width();
    const std::size_t m = pattern.size();

    PoaResult res{0, TupleDpTable(W + 1, m + 1)};
    TupleDpTable& t = res.table;

    t.at(0, 0) = {0};
    for (std::size_t v = 1; v <= m; ++v) t.at(0, v) = {static_cast<long>(v) * g};

    for (std::size_t u = 1; u <= W; ++u) {
        const WidthColumn wc = ds.column(u - 1);
        const std::size_t s = wc.s();
        const bool within = wc.col > 0;  // same letter as the previous row

        t.at(u, 0).assign(s, static_cast<long>(u) * g);
        for (std::size_t v = 1; v <= m; ++v) {
            const std::vector<long>& diag = t.at(u - 1, v - 1);
            const std::vector<long>& up = t.at(u - 1, v);
            const std::vector<long>& left = t.at(u, v - 1);
            std::vector<long>& cell = t.at(u, v);
            cell.resize(s);

            long diag_min = 0, up_min = 0;
            if (!within) {
                diag_min = *std::min_element(diag.begin(), diag.end());
                up_min = *std::min_element(up.begin(), up.end());
            }
            for (std::size_t h = 0; h < s; ++h) {
                const long sub = pattern[v - 1] == wc.chars[h] ? a : x;
                const long from_diag = (within ? diag[h] : diag_min) + sub;
                const long from_up = (within ? up[h] : up_min) + g;
                const long from_left = left[h] + g;
                cell[h] = std::min({from_diag, from_up, from_left});
            }
        }
    }

    const std::vector<long>& last = t.at(W, m);
    res.distance = *std::min_element(last.begin(), last.end());
    return res;
}

}  // namespace dsalign
