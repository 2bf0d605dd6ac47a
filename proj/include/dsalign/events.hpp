#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsalign/penalties.hpp"

namespace dsalign {

/*
 * Alignment event bookkeeping shared by the reference aligners and the
 * wavefront aligner. Conventions follow CIGAR against the text: M and X
 * consume one text width and one pattern character, D consumes text only,
 * I consumes pattern only.
 */

enum class EventOp : char { Match = 'M', Mismatch = 'X', Insertion = 'I', Deletion = 'D' };

struct EventRun {
    EventOp op;
    std::uint32_t len;

    bool operator==(const EventRun&) const = default;
};

using EventList = std::vector<EventRun>;

/// Append one event, merging with the previous run when the op repeats.
inline void push_event(EventList& ev, EventOp op, std::uint32_t len = 1) {
    if (!ev.empty() && ev.back().op == op) {
        ev.back().len += len;
    } else {
        ev.push_back({op, len});
    }
}

/// Per-op totals plus the number of gap runs G.
struct EventSummary {
    std::uint64_t matches = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t insertions = 0;
    std::uint64_t deletions = 0;
    std::uint64_t gap_runs = 0;

    std::uint64_t text_consumed() const { return matches + mismatches + deletions; }
    std::uint64_t pattern_consumed() const { return matches + mismatches + insertions; }
};

inline EventSummary summarize(const EventList& ev) {
    EventSummary s;
    for (const auto& r : ev) {
        switch (r.op) {
            case EventOp::Match: s.matches += r.len; break;
            case EventOp::Mismatch: s.mismatches += r.len; break;
            case EventOp::Insertion: s.insertions += r.len; ++s.gap_runs; break;
            case EventOp::Deletion: s.deletions += r.len; ++s.gap_runs; break;
        }
    }
    return s;
}

/// Score an event list under the given penalties.
inline long score_events(const EventList& ev, const Penalties& pen) {
    long total = 0;
    for (const auto& r : ev) {
        switch (r.op) {
            case EventOp::Match: total += static_cast<long>(r.len) * pen.a; break;
            case EventOp::Mismatch: total += static_cast<long>(r.len) * pen.x; break;
            case EventOp::Insertion:
            case EventOp::Deletion: total += pen.gap(r.len); break;
        }
    }
    return total;
}

/// Run-length text form, e.g. "4M1X3D".
inline std::string event_string(const EventList& ev) {
    std::string out;
    for (const auto& r : ev) {
        out += std::to_string(r.len);
        out.push_back(static_cast<char>(r.op));
    }
    return out;
}

/// Replay events against text and pattern; true iff lengths and match /
/// mismatch flags are all consistent.
inline bool replay_events(const EventList& ev, std::string_view text, std::string_view pattern) {
    std::size_t u = 0, v = 0;
    for (const auto& r : ev) {
        for (std::uint32_t i = 0; i < r.len; ++i) {
            switch (r.op) {
                case EventOp::Match:
                    if (u >= text.size() || v >= pattern.size() || text[u] != pattern[v]) return false;
                    ++u, ++v;
                    break;
                case EventOp::Mismatch:
                    if (u >= text.size() || v >= pattern.size() || text[u] == pattern[v]) return false;
                    ++u, ++v;
                    break;
                case EventOp::Deletion:
                    if (u >= text.size()) return false;
                    ++u;
                    break;
                case EventOp::Insertion:
                    if (v >= pattern.size()) return false;
                    ++v;
                    break;
            }
        }
    }
    return u == text.size() && v == pattern.size();
}

}  // namespace dsalign
