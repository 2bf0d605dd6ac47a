#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "dsalign/events.hpp"
#include "dsalign/penalties.hpp"
#include "dsalign/simulate.hpp"
#include "dsalign/wavefront.hpp"

#if __has_include(<sys/resource.h>)
#include <sys/resource.h>
#define DSALIGN_HAS_RUSAGE 1
#endif

namespace dsalign {

/// Best-effort peak resident set size in kilobytes; empty when the platform
/// does not report it.
inline std::optional<std::int64_t> peak_memory_kb() {
#ifdef DSALIGN_HAS_RUSAGE
    rusage ru{};
    if (getrusage(RUSAGE_SELF, &ru) == 0) return static_cast<std::int64_t>(ru.ru_maxrss);
#endif
    return std::nullopt;
}

/// Machine-readable record of one alignment run.
struct RunReport {
    long distance = 0;
    EventSummary events;
    std::string event_string;
    double wall_seconds = 0.0;
    std::uint64_t work = 0;
    std::optional<std::int64_t> peak_kb;
    std::string text_digest;
    std::string pattern_digest;
    Penalties penalties;
    std::size_t text_length = 0;  // n
    std::size_t text_size = 0;    // N
    std::size_t text_width = 0;   // W
    std::size_t pattern_length = 0;
    std::optional<long> oracle_distance;

    /// Single-line summary: `d=<n>  <M>M <X>X <I>I <D>D <G>G`.
    std::string human() const {
        std::string s = "d=" + std::to_string(distance) + "  ";
        s += std::to_string(events.matches) + "M ";
        s += std::to_string(events.mismatches) + "X ";
        s += std::to_string(events.insertions) + "I ";
        s += std::to_string(events.deletions) + "D ";
        s += std::to_string(events.gap_runs) + "G";
        return s;
    }
};

inline void to_json(nlohmann::json& j, const RunReport& r) {
    j = nlohmann::json{
        {"distance", r.distance},
        {"events",
         {{"M", r.events.matches},
          {"X", r.events.mismatches},
          {"I", r.events.insertions},
          {"D", r.events.deletions},
          {"G", r.events.gap_runs}}},
        {"event_string", r.event_string},
        {"wall_seconds", r.wall_seconds},
        {"work", r.work},
        {"peak_memory_kb", r.peak_kb ? nlohmann::json(*r.peak_kb) : nlohmann::json(nullptr)},
        {"text_digest", r.text_digest},
        {"pattern_digest", r.pattern_digest},
        {"penalties", {{"a", r.penalties.a}, {"x", r.penalties.x}, {"o", r.penalties.o}, {"e", r.penalties.e}}},
        {"text", {{"n", r.text_length}, {"N", r.text_size}, {"W", r.text_width}}},
        {"pattern_length", r.pattern_length},
        {"oracle_distance", r.oracle_distance ? nlohmann::json(*r.oracle_distance) : nlohmann::json(nullptr)},
    };
}

inline void from_json(const nlohmann::json& j, RunReport& r) {
    j.at("distance").get_to(r.distance);
    const auto& ev = j.at("events");
    ev.at("M").get_to(r.events.matches);
    ev.at("X").get_to(r.events.mismatches);
    ev.at("I").get_to(r.events.insertions);
    ev.at("D").get_to(r.events.deletions);
    ev.at("G").get_to(r.events.gap_runs);
    j.at("event_string").get_to(r.event_string);
    j.at("wall_seconds").get_to(r.wall_seconds);
    j.at("work").get_to(r.work);
    if (!j.at("peak_memory_kb").is_null()) r.peak_kb = j.at("peak_memory_kb").get<std::int64_t>();
    j.at("text_digest").get_to(r.text_digest);
    j.at("pattern_digest").get_to(r.pattern_digest);
    const auto& p = j.at("penalties");
    p.at("a").get_to(r.penalties.a);
    p.at("x").get_to(r.penalties.x);
    p.at("o").get_to(r.penalties.o);
    p.at("e").get_to(r.penalties.e);
    const auto& t = j.at("text");
    t.at("n").get_to(r.text_length);
    t.at("N").get_to(r.text_size);
    t.at("W").get_to(r.text_width);
    j.at("pattern_length").get_to(r.pattern_length);
    if (!j.at("oracle_distance").is_null()) r.oracle_distance = j.at("oracle_distance").get<long>();
}

/// What the simulator planted into a pattern, with the event counts a
/// correct alignment must reproduce. Positions are 1-based in the file.
struct TruthLog {
    std::uint64_t member_seed = 0;
    std::uint64_t snp_seed = 0;
    std::uint64_t indel_seed = 0;
    double snp_rate = 0.0;
    double indel_rate = 0.0;
    std::size_t width = 0;

    SnpResult snps;
    IndelResult indels;

    bool expects_zero_distance() const {
        return snps.events.empty() && indels.events.empty();
    }
};

inline void to_json(nlohmann::json& j, const TruthLog& t) {
    nlohmann::json snp_list = nlohmann::json::array();
    for (const auto& e : t.snps.events) {
        snp_list.push_back({{"pos", e.pos + 1}, {"from", std::string(1, e.from)}, {"to", std::string(1, e.to)}});
    }
    nlohmann::json indel_list = nlohmann::json::array();
    for (const auto& e : t.indels.events) {
        indel_list.push_back(
            {{"pos", e.pos + 1}, {"type", e.insertion ? "ins" : "del"}, {"bases", e.bases}});
    }
    j = nlohmann::json{
        {"seeds", {{"member", t.member_seed}, {"snp", t.snp_seed}, {"indel", t.indel_seed}}},
        {"rates", {{"snp", t.snp_rate}, {"indel", t.indel_rate}}},
        {"width", t.width},
        {"snps", {{"drawn", t.snps.events.size()}, {"changed", t.snps.changed}, {"list", snp_list}}},
        {"indels",
         {{"events", t.indels.events.size()},
          {"inserted_bases", t.indels.inserted_bases},
          {"deleted_bases", t.indels.deleted_bases},
          {"list", indel_list}}},
        {"expected",
         {{"zero_distance", t.expects_zero_distance()},
          {"max_mismatches", t.snps.changed},
          {"insertions", t.indels.inserted_bases},
          {"deletions", t.indels.deleted_bases},
          {"gap_runs", t.indels.events.size()}}},
    };
}

/// Check an alignment run against the planted truth. Empty string when the
/// run matches expectations, else a description of the first violation.
inline std::string verify_against_truth(const TruthLog& t, const RunReport& r) {
    if (t.expects_zero_distance()) {
        if (r.distance != 0) return "expected distance 0, got " + std::to_string(r.distance);
    }
    if (t.indels.events.empty()) {
        // substitution-only divergence must align without gaps
        if (r.events.insertions != 0 || r.events.deletions != 0) {
            return "expected a gap-free alignment";
        }
        if (r.events.mismatches > t.snps.changed) {
            return "more mismatches than planted substitutions";
        }
        if (r.events.matches != r.text_width - r.events.mismatches) {
            return "match count does not complement the mismatches";
        }
        if (r.distance != static_cast<long>(r.events.mismatches) * r.penalties.x) {
            return "distance is not x times the mismatch count";
        }
    }
    if (t.snps.events.empty() && !t.indels.events.empty()) {
        if (r.events.mismatches != 0) return "expected no mismatches on indel-only divergence";
        if (r.events.gap_runs != t.indels.events.size()) {
            return "gap runs " + std::to_string(r.events.gap_runs) + " != planted events " +
                   std::to_string(t.indels.events.size());
        }
        if (r.events.insertions != t.indels.inserted_bases ||
            r.events.deletions != t.indels.deleted_bases) {
            return "inserted/deleted base totals do not match the truth log";
        }
    }
    return {};
}

}  // namespace dsalign
