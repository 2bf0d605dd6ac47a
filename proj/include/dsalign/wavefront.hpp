#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dsalign/dstring.hpp"
#include "dsalign/events.hpp"
#include "dsalign/penalties.hpp"

namespace dsalign {

/*
 * Wavefront alignment of a pattern against a D-string with affine gap
 * penalties.
 *
 * Offsets count consumed text widths (u); a diagonal k = u - v pairs a text
 * offset with a pattern offset v. For distance d and diagonal k the three
 * components hold furthest-reaching offsets for states whose last event was
 * a (mis)match (M), an inserted pattern character (I, k decreases), or a
 * deleted text width (D, k increases).
 *
 * Inside a degenerate letter an offset is meaningless without knowing which
 * variant the consumed columns followed, so offsets are stored per variant
 * slot, grouped by the letter they are positioned in. Slots advance
 * independently during extension; a slot that fails its next character is
 * abandoned and keeps its offset as a source for mismatch and gap steps.
 * When a slot reaches the end of its letter the record spills into a fresh
 * all-variants group of the next letter; abandoned slots stay behind so no
 * reachable state is forgotten. All cross-variant propagation happens at
 * letter boundaries only, which is what rules out matches stitched together
 * from different variants of one letter.
 */

using WfOffset = std::int32_t;
inline constexpr WfOffset kWfUnset = -1;

enum class WfComp : int { M = 0, I = 1, D = 2 };

/// How a slot state was produced; drives the traceback.
enum class WfOrigin : std::uint8_t {
    None,
    Start,     // the d=0 seed at (0,0)
    Cross,     // entered this letter by matching through the previous one
    Mismatch,  // consumed one width + one pattern char from M at d-x
    FoldI,     // copied from this distance's I component
    FoldD,     // copied from this distance's D component
    OpenI,     // consumed a pattern char from M at d-o-e, diagonal k+1
    ExtendI,   // consumed a pattern char from I at d-e, diagonal k+1
    OpenD,     // consumed a width from M at d-o-e, diagonal k-1
    ExtendD,   // consumed a width from D at d-e, diagonal k-1
};

struct SlotState {
    WfOffset raw = kWfUnset;  // offset as produced by the recurrence step
    WfOffset off = kWfUnset;  // furthest offset after match extension
    bool abandoned = false;
    WfOrigin origin = WfOrigin::None;
    std::int32_t src_letter = -1;  // group letter of the source state
    std::uint16_t src_slot = 0;    // slot within the source group
    std::int16_t bind = -1;        // variant bound by the consumed width, -1 if free
};

/// Offsets of one (distance, diagonal, component) for one context letter:
/// one slot per variant of that letter.
struct DiagGroup {
    std::int32_t ctx = -1;  // letter id; the D-string's letter count means "past the end"
    std::vector<SlotState> slots;
    // every slot reached the letter end: the crossing into the next letter
    // reproduced these states, so the group is kept for traceback only
    bool sealed = false;
};

/// All offset groups of one (distance, diagonal, component).
struct DiagRecord {
    std::vector<DiagGroup> groups;

    bool empty() const { return groups.empty(); }

    WfOffset max_offset() const {
        WfOffset best = kWfUnset;
        for (const auto& g : groups) {
            for (const auto& s : g.slots) best = std::max(best, s.off);
        }
        return best;
    }

    const DiagGroup* find(std::int32_t ctx) const {
        for (const auto& g : groups) {
            if (g.ctx == ctx) return &g;
        }
        return nullptr;
    }
};

/// One distance's wavefront: diagonal range [lo, hi] with M/I/D records.
struct Wavefront {
    std::int64_t lo = 0, hi = -1;
    std::vector<std::array<DiagRecord, 3>> diags;  // index k - lo

    bool empty() const { return hi < lo; }
    bool covers(std::int64_t k) const { return k >= lo && k <= hi; }
    DiagRecord& at(std::int64_t k, WfComp c) { return diags[k - lo][static_cast<int>(c)]; }
    const DiagRecord& at(std::int64_t k, WfComp c) const {
        return diags[k - lo][static_cast<int>(c)];
    }
};

struct WorkStats {
    std::uint64_t slot_writes = 0;  // offset-slot updates across the run
    std::uint64_t wavefronts = 0;   // stored wavefronts, empty ones included
    std::uint64_t extend_writes = 0;  // subset of slot_writes from match extension
};

struct AlignmentResult {
    long distance = 0;
    EventList events;
    std::uint64_t gap_opens = 0;               // G: maximal I/D runs
    std::vector<std::uint32_t> variant_path;   // chosen variant per letter
    std::string member;                        // member induced by variant_path
    WorkStats stats;
};

class WavefrontAligner {
public:
    WavefrontAligner(const DString& ds, std::string_view pattern, const Penalties& pen)
        : ds_(ds), pattern_(pattern), pen_(pen),
          width_(static_cast<WfOffset>(ds.width())), m_(static_cast<std::int64_t>(pattern.size())) {
        pen.validate();
        if (pattern.empty()) throw std::invalid_argument("empty pattern");
        if (ds.width() == 0) throw std::invalid_argument("empty D-string");
        build_segments();
    }

    AlignmentResult align() {
        seed();
        const std::int64_t k_final = static_cast<std::int64_t>(width_) - m_;
        // worst case: mismatch everything plus one gap for the length difference
        const std::int64_t diff = k_final >= 0 ? k_final : -k_final;
        const std::int64_t limit =
            static_cast<std::int64_t>(pen_.x) * std::min<std::int64_t>(width_, m_) + pen_.o + pen_.e * diff + 1;
        std::int64_t d = 0;
        while (true) {
            extend(d);
            const Wavefront& wf = fronts_[d];
            if (wf.covers(k_final) && wf.at(k_final, WfComp::M).max_offset() == width_) break;
            ++d;
            if (d > limit) throw std::logic_error("wavefront did not terminate within the distance bound");
            advance(d);
        }
        return traceback(d, k_final);
    }

    /// Stored wavefront for distance d (valid after align()).
    const Wavefront& wavefront(std::int64_t d) const { return fronts_.at(d); }
    std::int64_t distance_reached() const { return static_cast<std::int64_t>(fronts_.size()) - 1; }
    const WorkStats& stats() const { return stats_; }

private:
    // Group contexts are segments: each degenerate letter is its own
    // segment, while maximal runs of single-variant letters collapse into
    // one arity-1 segment. ctx == n_ is the "all widths consumed" state.
    void build_segments() {
        seg_of_.resize(width_);
        solid_char_.assign(width_, '\0');
        std::int32_t seg = -1;
        bool prev_solid = false;
        for (std::size_t id = 0; id < ds_.length(); ++id) {
            const DegenerateLetter& l = ds_.letter(id);
            const bool solid = l.s() == 1;
            if (!solid || !prev_solid) {
                ++seg;
                seg_start_.push_back(static_cast<WfOffset>(ds_.letter_start(id)));
                seg_arity_.push_back(static_cast<std::uint32_t>(l.s()));
                seg_letter_.push_back(solid ? -1 : static_cast<std::int32_t>(id));
            }
            const std::size_t b = ds_.letter_start(id);
            for (std::size_t c = 0; c < l.ell(); ++c) {
                seg_of_[b + c] = seg;
                if (solid) solid_char_[b + c] = l.variants[0][c];
            }
            seg_end_.resize(seg + 1);
            seg_end_[seg] = static_cast<WfOffset>(ds_.letter_end(id));
            prev_solid = solid;
        }
        n_ = seg + 1;
    }

    std::int32_t ctx_of(WfOffset u) const { return u >= width_ ? n_ : seg_of_[u]; }
    WfOffset ctx_start(std::int32_t ctx) const { return ctx >= n_ ? width_ : seg_start_[ctx]; }
    WfOffset ctx_end(std::int32_t ctx) const { return ctx >= n_ ? width_ : seg_end_[ctx]; }
    std::size_t ctx_arity(std::int32_t ctx) const { return ctx >= n_ ? 1 : seg_arity_[ctx]; }
    /// Degenerate letter id behind a segment, or -1 for solid runs.
    std::int32_t ctx_letter(std::int32_t ctx) const { return ctx >= n_ ? -1 : seg_letter_[ctx]; }
    char variant_char(std::int32_t ctx, std::size_t h, WfOffset u) const {
        const std::int32_t letter = seg_letter_[ctx];
        if (letter < 0) return solid_char_[u];
        return ds_.letter(letter).variants[h][u - seg_start_[ctx]];
    }

    // Merge a candidate state into rec. slot < 0 broadcasts to every variant
    // of the context. A candidate sitting at its letter's end is slot-free
    // and re-homes as an untouched state of the following letter.
    //
    // A per-(diagonal, component) high-water mark records the furthest
    // offset ever written for each (context, slot). A candidate at or below
    // the mark was already reachable at an equal or lower distance, so it is
    // dominated and dropped; this is what stops settled states from being
    // re-proposed into every later wavefront. Returns the index of the
    // written group, or -1 when nothing improved.
    int upsert(DiagRecord& rec, std::int64_t k, WfComp comp, std::int32_t ctx, int slot,
               WfOffset off, WfOrigin origin, std::int32_t src_letter, std::uint16_t src_slot,
               std::int16_t bind) {
        if (ctx < n_ && off == ctx_end(ctx)) {
            ctx = ctx_of(off);
            slot = -1;
        }
        // states in single-variant contexts carry no variant binding, so any
        // strictly further state already recorded on this diagonal and
        // component dominates them outright (same-offset candidates share a
        // context and are deduplicated by the per-context marks below)
        WfOffset& reach = reach_[k][static_cast<int>(comp)];
        const bool slot_free = ctx >= n_ || seg_letter_[ctx] < 0;
        if (slot_free && off < reach) return -1;

        auto& marks = hwm_[k][static_cast<int>(comp)];
        auto mark_it = marks.find(ctx);
        if (mark_it != marks.end()) {
            const std::vector<WfOffset>& mark = mark_it->second;
            bool improvable = false;
            const std::size_t mh0 = slot < 0 ? 0 : static_cast<std::size_t>(slot);
            const std::size_t mh1 = slot < 0 ? mark.size() : mh0 + 1;
            for (std::size_t h = mh0; h < mh1 && !improvable; ++h) {
                improvable = mark[h] < off;
            }
            if (!improvable) return -1;
        } else {
            mark_it = marks.emplace(ctx, std::vector<WfOffset>(ctx_arity(ctx), kWfUnset)).first;
        }
        std::vector<WfOffset>& mark = mark_it->second;

        int gi = -1;
        for (int i = static_cast<int>(rec.groups.size()) - 1; i >= 0; --i) {
            if (rec.groups[i].ctx == ctx) {
                gi = i;
                break;
            }
        }
        if (gi < 0) {
            rec.groups.push_back(DiagGroup{ctx, std::vector<SlotState>(ctx_arity(ctx))});
            gi = static_cast<int>(rec.groups.size()) - 1;
        }
        DiagGroup& grp = rec.groups[gi];
        bool improved = false;
        const std::size_t h0 = slot < 0 ? 0 : static_cast<std::size_t>(slot);
        const std::size_t h1 = slot < 0 ? grp.slots.size() : h0 + 1;
        for (std::size_t h = h0; h < h1; ++h) {
            SlotState& s = grp.slots[h];
            if (off > s.off && off > mark[h]) {
                s = SlotState{off, off, false, origin, src_letter, src_slot, bind};
                mark[h] = off;
                ++stats_.slot_writes;
                improved = true;
            }
        }
        if (improved && off > reach) reach = off;
        return improved ? gi : -1;
    }

    void seed() {
        fronts_.clear();
        hwm_.clear();
        reach_.clear();
        stats_ = WorkStats{};
        fronts_.emplace_back();
        Wavefront& wf = fronts_[0];
        wf.lo = wf.hi = 0;
        wf.diags.resize(1);
        upsert(wf.at(0, WfComp::M), 0, WfComp::M, ctx_of(0), -1, 0, WfOrigin::Start, -1, 0, -1);
        stats_.wavefronts = 1;
    }

    // Match-extend every group of the M record at (d, k). Slots advance
    // independently; reaching the letter end spills a fresh group of the
    // next letter, which is walked in turn.
    void extend(std::int64_t d) {
        Wavefront& wf = fronts_[d];
        if (wf.empty()) return;
        std::vector<std::size_t> queue;
        for (std::int64_t k = wf.lo; k <= wf.hi; ++k) {
            DiagRecord& rec = wf.at(k, WfComp::M);
            queue.clear();
            for (std::size_t gi = 0; gi < rec.groups.size(); ++gi) queue.push_back(gi);
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const int spilled = walk_group(rec, queue[qi], k);
                if (spilled >= 0) queue.push_back(static_cast<std::size_t>(spilled));
            }
        }
    }

    // Returns the index of a group that was improved by crossing out of this
    // one (and so needs walking), or -1.
    int walk_group(DiagRecord& rec, std::size_t gi, std::int64_t k) {
        const std::int32_t ctx = rec.groups[gi].ctx;
        if (ctx >= n_ || rec.groups[gi].sealed) return -1;
        const WfOffset end = ctx_end(ctx);
        bool any = true;
        while (any) {
            any = false;
            DiagGroup& g = rec.groups[gi];
            for (std::size_t h = 0; h < g.slots.size(); ++h) {
                SlotState& s = g.slots[h];
                if (s.off == kWfUnset || s.abandoned || s.off >= end) continue;
                const std::int64_t v = s.off - k;
                if (v < 0 || v >= m_) continue;
                if (variant_char(ctx, h, s.off) == pattern_[v]) {
                    ++s.off;
                    ++stats_.slot_writes;
                    ++stats_.extend_writes;
                    any = true;
                } else {
                    s.abandoned = true;
                }
            }
        }
        int cross = -1;
        {
            DiagGroup& g = rec.groups[gi];
            // record walked offsets in the high-water marks so states lagging
            // behind this pass are recognized as dominated later
            std::vector<WfOffset>& mark = hwm_[k][static_cast<int>(WfComp::M)][ctx];
            if (mark.empty()) mark.assign(g.slots.size(), kWfUnset);
            WfOffset& reach = reach_[k][static_cast<int>(WfComp::M)];
            bool all_at_end = true;
            for (std::size_t h = 0; h < g.slots.size(); ++h) {
                const SlotState& s = g.slots[h];
                if (s.off > mark[h]) mark[h] = s.off;
                if (s.off > reach) reach = s.off;
                if (s.off == end && !s.abandoned) {
                    if (cross < 0) cross = static_cast<int>(h);
                } else {
                    all_at_end = false;
                }
            }
            g.sealed = all_at_end && cross >= 0;
        }
        if (cross < 0) return -1;
        // upsert may reallocate rec.groups; indices stay valid
        return upsert(rec, k, WfComp::M, ctx_of(end), -1, end, WfOrigin::Cross, ctx,
                      static_cast<std::uint16_t>(cross), -1);
    }

    // Build the wavefront for distance d from those at d-x, d-o-e and d-e.
    void advance(std::int64_t d) {
        fronts_.emplace_back();  // appended before taking source pointers
        const Wavefront* mis = source(d - pen_.x);
        const Wavefront* open = source(d - pen_.o - pen_.e);
        const Wavefront* ext = source(d - pen_.e);

        Wavefront& wf = fronts_.back();
        ++stats_.wavefronts;
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (const Wavefront* src : {mis, open, ext}) {
            if (src == nullptr) continue;
            lo = std::min(lo, src->lo);
            hi = std::max(hi, src->hi);
        }
        if (lo > hi) return;  // nothing reaches this distance; stays empty
        lo = std::max(lo - 1, -m_);
        hi = std::min<std::int64_t>(hi + 1, width_);
        if (lo > hi) return;
        wf.lo = lo;
        wf.hi = hi;
        wf.diags.resize(hi - lo + 1);

        for (std::int64_t k = lo; k <= hi; ++k) {
            // I: consume one pattern character, arriving from diagonal k+1
            DiagRecord& rec_i = wf.at(k, WfComp::I);
            if (ext != nullptr && ext->covers(k + 1)) {
                emit_pattern_gap(rec_i, ext->at(k + 1, WfComp::I), k, WfComp::I, WfOrigin::ExtendI);
            }
            if (open != nullptr && open->covers(k + 1)) {
                emit_pattern_gap(rec_i, open->at(k + 1, WfComp::M), k, WfComp::I, WfOrigin::OpenI);
            }
            // D: consume one text width, arriving from diagonal k-1
            DiagRecord& rec_d = wf.at(k, WfComp::D);
            if (ext != nullptr && ext->covers(k - 1)) {
                emit_text_gap(rec_d, ext->at(k - 1, WfComp::D), k, WfComp::D, WfOrigin::ExtendD);
            }
            if (open != nullptr && open->covers(k - 1)) {
                emit_text_gap(rec_d, open->at(k - 1, WfComp::M), k, WfComp::D, WfOrigin::OpenD);
            }
            // M: mismatch along k, then fold in this distance's I and D
            DiagRecord& rec_m = wf.at(k, WfComp::M);
            if (mis != nullptr && mis->covers(k)) {
                emit_mismatch(rec_m, mis->at(k, WfComp::M), k);
            }
            fold(rec_m, rec_d, k, WfOrigin::FoldD);
            fold(rec_m, rec_i, k, WfOrigin::FoldI);
        }
    }

    const Wavefront* source(std::int64_t d) const {
        if (d < 0 || d >= static_cast<std::int64_t>(fronts_.size())) return nullptr;
        const Wavefront& wf = fronts_[d];
        return wf.empty() ? nullptr : &wf;
    }

    void emit_pattern_gap(DiagRecord& rec, const DiagRecord& src, std::int64_t k, WfComp comp,
                          WfOrigin origin) {
        for (const DiagGroup& g : src.groups) {
            if (g.sealed) continue;
            for (std::size_t h = 0; h < g.slots.size(); ++h) {
                const WfOffset u = g.slots[h].off;
                if (u == kWfUnset) continue;
                const std::int64_t v_new = u - k;
                if (v_new < 1 || v_new > m_) continue;
                upsert(rec, k, comp, g.ctx, static_cast<int>(h), u, origin, g.ctx,
                       static_cast<std::uint16_t>(h), -1);
            }
        }
    }

    void emit_text_gap(DiagRecord& rec, const DiagRecord& src, std::int64_t k, WfComp comp,
                       WfOrigin origin) {
        for (const DiagGroup& g : src.groups) {
            if (g.sealed) continue;
            for (std::size_t h = 0; h < g.slots.size(); ++h) {
                const WfOffset u = g.slots[h].off;
                if (u == kWfUnset || u >= width_) continue;
                const std::int64_t v = static_cast<std::int64_t>(u) + 1 - k;
                if (v < 0 || v > m_) continue;
                if (g.ctx < n_ && u < ctx_end(g.ctx)) {
                    // the deleted width stays inside this letter: slot-preserving
                    upsert(rec, k, comp, g.ctx, static_cast<int>(h), u + 1, origin, g.ctx,
                           static_cast<std::uint16_t>(h), static_cast<std::int16_t>(h));
                } else {
                    // the deleted width opens the next letter for every variant
                    upsert(rec, k, comp, ctx_of(u), -1, u + 1, origin, g.ctx,
                           static_cast<std::uint16_t>(h), -1);
                }
            }
        }
    }

    void emit_mismatch(DiagRecord& rec, const DiagRecord& src, std::int64_t k) {
        for (const DiagGroup& g : src.groups) {
            if (g.sealed) continue;
            for (std::size_t h = 0; h < g.slots.size(); ++h) {
                const WfOffset u = g.slots[h].off;
                if (u == kWfUnset || u >= width_) continue;
                const std::int64_t v = u - k;
                if (v < 0 || v >= m_) continue;
                if (g.ctx < n_ && u < ctx_end(g.ctx)) {
                    // abandoned slots are exactly the ones whose character
                    // differs here; a matching character was already consumed
                    // for free at the lower distance
                    if (variant_char(g.ctx, h, u) == pattern_[v]) continue;
                    upsert(rec, k, WfComp::M, g.ctx, static_cast<int>(h), u + 1, WfOrigin::Mismatch,
                           g.ctx, static_cast<std::uint16_t>(h), static_cast<std::int16_t>(h));
                } else {
                    // entering the next letter: one candidate per variant that
                    // actually mismatches the pattern character
                    const std::int32_t ctx2 = ctx_of(u);
                    for (std::size_t h2 = 0; h2 < ctx_arity(ctx2); ++h2) {
                        if (variant_char(ctx2, h2, u) == pattern_[v]) continue;
                        upsert(rec, k, WfComp::M, ctx2, static_cast<int>(h2), u + 1,
                               WfOrigin::Mismatch, g.ctx, static_cast<std::uint16_t>(h),
                               static_cast<std::int16_t>(h2));
                    }
                }
            }
        }
    }

    void fold(DiagRecord& rec_m, const DiagRecord& src, std::int64_t k, WfOrigin origin) {
        for (const DiagGroup& g : src.groups) {
            if (g.sealed) continue;
            for (std::size_t h = 0; h < g.slots.size(); ++h) {
                if (g.slots[h].off == kWfUnset) continue;
                upsert(rec_m, k, WfComp::M, g.ctx, static_cast<int>(h), g.slots[h].off, origin,
                       g.ctx, static_cast<std::uint16_t>(h), -1);
            }
        }
    }

    // Walk provenance backwards from the final state, emitting events in
    // reverse and recording which variant each consumed width followed.
    AlignmentResult traceback(std::int64_t d_final, std::int64_t k_final) {
        AlignmentResult res;
        res.distance = d_final;
        res.stats = stats_;

        const auto n_letters = static_cast<std::int32_t>(ds_.length());
        std::vector<std::int32_t> bound(n_letters, -1);
        auto bind_letter = [&](std::int32_t letter, std::int32_t variant) {
            if (letter < 0 || letter >= n_letters || variant < 0) return;
            if (bound[letter] >= 0 && bound[letter] != variant) {
                throw std::logic_error("traceback bound one letter to two variants");
            }
            bound[letter] = variant;
        };
        // binding for a consumed width: only degenerate letters matter
        auto bind_width = [&](WfOffset w, std::int32_t variant) {
            const auto lid = static_cast<std::int32_t>(ds_.letter_at(w));
            if (ds_.letter(lid).s() > 1) bind_letter(lid, variant);
        };

        // locate the terminal slot
        std::int64_t d = d_final, k = k_final;
        WfComp comp = WfComp::M;
        std::int32_t ctx = -1;
        std::size_t slot = 0;
        WfOffset u = width_;
        {
            const DiagRecord& rec = fronts_[d_final].at(k_final, WfComp::M);
            bool found = false;
            for (const auto& g : rec.groups) {
                for (std::size_t h = 0; h < g.slots.size() && !found; ++h) {
                    if (g.slots[h].off == width_) {
                        ctx = g.ctx;
                        slot = h;
                        found = true;
                    }
                }
                if (found) break;
            }
            if (!found) throw std::logic_error("terminal wavefront state missing");
        }

        EventList rev;
        while (true) {
            const DiagRecord& rec = fronts_[d].at(k, comp);
            const DiagGroup* g = rec.find(ctx);
            if (g == nullptr || g->slots[slot].off != u) {
                throw std::logic_error("traceback lost the wavefront state");
            }
            const SlotState& s = g->slots[slot];
            if (comp == WfComp::M && u > s.raw) {
                // match run within this segment along this variant
                push_event(rev, EventOp::Match, static_cast<std::uint32_t>(u - s.raw));
                bind_letter(ctx_letter(ctx), static_cast<std::int32_t>(slot));
                u = s.raw;
            }
            if (s.origin == WfOrigin::Start) break;
            switch (s.origin) {
                case WfOrigin::Cross:
                    ctx = s.src_letter;
                    slot = s.src_slot;
                    break;
                case WfOrigin::FoldI:
                    comp = WfComp::I;
                    ctx = s.src_letter;
                    slot = s.src_slot;
                    break;
                case WfOrigin::FoldD:
                    comp = WfComp::D;
                    ctx = s.src_letter;
                    slot = s.src_slot;
                    break;
                case WfOrigin::Mismatch:
                    push_event(rev, EventOp::Mismatch);
                    bind_width(u - 1, s.bind);
                    d -= pen_.x;
                    comp = WfComp::M;
                    ctx = s.src_letter;
                    slot = s.src_slot;
                    --u;
                    break;
                case WfOrigin::OpenD:
                case WfOrigin::ExtendD: {
                    push_event(rev, EventOp::Deletion);
                    if (s.bind >= 0) bind_width(u - 1, s.bind);
                    d -= (s.origin == WfOrigin::OpenD) ? pen_.o + pen_.e : pen_.e;
                    comp = (s.origin == WfOrigin::OpenD) ? WfComp::M : WfComp::D;
                    k -= 1;
                    ctx = s.src_letter;
                    slot = s.src_slot;
                    --u;
                    break;
                }
                case WfOrigin::OpenI:
                case WfOrigin::ExtendI:
                    push_event(rev, EventOp::Insertion);
                    d -= (s.origin == WfOrigin::OpenI) ? pen_.o + pen_.e : pen_.e;
                    comp = (s.origin == WfOrigin::OpenI) ? WfComp::M : WfComp::I;
                    k += 1;
                    ctx = s.src_letter;
                    slot = s.src_slot;
                    break;
                default:
                    throw std::logic_error("traceback hit an unset state");
            }
        }
        if (u != 0) throw std::logic_error("traceback did not reach the origin");

        for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
            push_event(res.events, it->op, it->len);
        }
        res.gap_opens = summarize(res.events).gap_runs;

        res.variant_path.resize(n_letters);
        res.member.reserve(width_);
        for (std::int32_t i = 0; i < n_letters; ++i) {
            res.variant_path[i] = bound[i] >= 0 ? static_cast<std::uint32_t>(bound[i]) : 0;
            res.member += ds_.letter(i).variants[res.variant_path[i]];
        }
        return res;
    }

    const DString& ds_;
    std::string_view pattern_;
    Penalties pen_;
    WfOffset width_;
    std::int64_t m_;
    std::int32_t n_ = 0;  // segment count
    std::vector<std::int32_t> seg_of_;       // width -> segment
    std::vector<WfOffset> seg_start_, seg_end_;
    std::vector<std::uint32_t> seg_arity_;
    std::vector<std::int32_t> seg_letter_;   // degenerate letter id or -1
    std::vector<char> solid_char_;
    // per diagonal and component: furthest offset ever recorded per
    // (context, slot); used to drop dominated candidates
    std::unordered_map<std::int64_t,
                       std::array<std::unordered_map<std::int32_t, std::vector<WfOffset>>, 3>>
        hwm_;
    struct Reach {
        WfOffset v[3] = {kWfUnset, kWfUnset, kWfUnset};
        WfOffset& operator[](int i) { return v[i]; }
    };
    std::unordered_map<std::int64_t, Reach> reach_;  // furthest write per (k, comp)
    std::vector<Wavefront> fronts_;
    WorkStats stats_;
};

/// Align pattern against ds, returning the distance, the event list, and the
/// member string the alignment follows.
inline AlignmentResult wavefront_align(const DString& ds, std::string_view pattern,
                                       const Penalties& pen) {
    WavefrontAligner aligner(ds, pattern, pen);
    return aligner.align();
}

/// Check every promised property of a result: event totals cover both
/// sequences, events re-score to the distance, the replay against the chosen
/// member is faithful, and the member really belongs to the D-string.
/// Returns an empty string when everything holds, else a description.
inline std::string check_alignment(const DString& ds, std::string_view pattern,
                                   const Penalties& pen, const AlignmentResult& r) {
    const EventSummary s = summarize(r.events);
    if (s.text_consumed() != ds.width()) return "event lengths do not cover the text width";
    if (s.pattern_consumed() != pattern.size()) return "event lengths do not cover the pattern";
    if (score_events(r.events, pen) != r.distance) return "events do not re-score to the distance";
    if (s.gap_runs != r.gap_opens) return "gap-run count mismatch";
    if (!ds.contains(r.member)) return "chosen member does not belong to the D-string";
    if (!replay_events(r.events, r.member, pattern)) return "event replay against the member failed";
    return {};
}

}  // namespace dsalign
