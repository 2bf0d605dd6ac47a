#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dsalign/dstring.hpp"
#include "dsalign/gotoh.hpp"

namespace dsalign {

/// Default limit on member enumeration for the brute-force oracle.
inline constexpr std::uint64_t kDefaultMemberCap = 100000;

struct TooManyMembers : std::runtime_error {
    explicit TooManyMembers(const MemberCount& mc)
        : std::runtime_error(mc.exact ? "too many members: " + std::to_string(mc.value)
                                      : "too many members: count exceeds 64-bit range") {}
};

struct OracleResult {
    long distance = 0;
    std::string witness;  // one member attaining the minimum
    EventList events;     // gotoh events against the witness
};

/// Brute-force affine-gap alignment oracle: the minimum over all member
/// strings of the Gotoh distance to the pattern. Desk scale only; refuses
/// D-strings with more than `cap` members.
inline OracleResult oracle_affine(const DString& ds, std::string_view pattern, const Penalties& pen,
                                  std::uint64_t cap = kDefaultMemberCap) {
    pen.validate();
    const MemberCount mc = ds.member_count();
    if (!mc.exact || mc.value > cap) throw TooManyMembers(mc);

    OracleResult best;
    bool first = true;
    for (const std::string& member : members(ds, cap)) {
        GotohResult g = gotoh_align(member, pattern, pen);
        if (first || g.distance < best.distance) {
            best.distance = g.distance;
            best.witness = member;
            best.events = std::move(g.events);
            first = false;
        }
    }
    return best;
}

}  // namespace dsalign
