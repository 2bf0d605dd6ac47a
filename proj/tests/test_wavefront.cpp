#include "doctest.h"

#include "dsalign/oracle.hpp"
#include "dsalign/wavefront.hpp"
#include "helpers.hpp"

using namespace dsalign;

namespace {
const Penalties kPen{0, 1, 2, 1};

void check_against_oracle(const DString& ds, const std::string& p, const Penalties& pen) {
    CAPTURE(format_dstring(ds));
    CAPTURE(p);
    AlignmentResult r = wavefront_align(ds, p, pen);
    OracleResult o = oracle_affine(ds, p, pen, 1u << 20);
    CHECK(r.distance == o.distance);
    CHECK(check_alignment(ds, p, pen, r) == "");
}
}  // namespace

TEST_CASE("wavefront: exact member match") {
    DString ds = parse_dstring("GCA[AT/CG]C[G/T]GG[TA/AA/AT]TT");
    AlignmentResult r = wavefront_align(ds, "GCACGCTGGAATT", kPen);
    CHECK(r.distance == 0);
    CHECK(event_string(r.events) == "13M");
    CHECK(r.gap_opens == 0);
    CHECK(r.member == "GCACGCTGGAATT");
    CHECK(check_alignment(ds, "GCACGCTGGAATT", kPen, r) == "");
}

TEST_CASE("wavefront: one substitution inside a degenerate letter") {
    DString ds = parse_dstring("AC[GC/AT]A");
    AlignmentResult r = wavefront_align(ds, "ACGTA", kPen);
    CHECK(r.distance == 1);
    EventSummary s = summarize(r.events);
    CHECK(s.matches == 4);
    CHECK(s.mismatches == 1);
    CHECK(s.gap_runs == 0);
    CHECK(check_alignment(ds, "ACGTA", kPen, r) == "");
}

TEST_CASE("wavefront: single deletion on a solid text") {
    DString ds = parse_dstring("ACGT");
    AlignmentResult r = wavefront_align(ds, "ACT", kPen);
    CHECK(r.distance == 3);  // o + e
    CHECK(event_string(r.events) == "2M1D1M");
    CHECK(r.gap_opens == 1);
    CHECK(check_alignment(ds, "ACT", kPen, r) == "");
}

TEST_CASE("wavefront: variants may not be mixed within a letter") {
    // the sole letter's variants each mismatch the pattern twice; a slot-mixing
    // aligner would claim distance 1 by stitching a prefix of one variant to a
    // suffix of the other across a single mismatch
    DString ds = parse_dstring("[ACC/GTT]");
    CHECK(oracle_affine(ds, "AGT", kPen).distance == 2);
    AlignmentResult r = wavefront_align(ds, "AGT", kPen);
    CHECK(r.distance == 2);
    CHECK(check_alignment(ds, "AGT", kPen, r) == "");

    DString ds2 = parse_dstring("[ACA/GTG]");
    CHECK(oracle_affine(ds2, "AGG", kPen).distance == 2);
    CHECK(wavefront_align(ds2, "AGG", kPen).distance == 2);

    // same trap through a deletion instead of a mismatch
    DString ds3 = parse_dstring("[AG/CT]T");
    CHECK(wavefront_align(ds3, "AT", kPen).distance ==
          oracle_affine(ds3, "AT", kPen).distance);
}

TEST_CASE("wavefront: abandoned slots freeze, matching slots advance") {
    // letter [GC/AT] against "GT": the first column extends only variant 0,
    // the second column kills it, and the mismatch step must stay slot-aware
    DString ds = parse_dstring("[GC/AT]");
    WavefrontAligner aligner(ds, "GT", kPen);
    AlignmentResult r = aligner.align();
    CHECK(r.distance == 1);

    const Wavefront& wf0 = aligner.wavefront(0);
    REQUIRE(wf0.covers(0));
    const DiagGroup* g = wf0.at(0, WfComp::M).find(0);
    REQUIRE(g != nullptr);
    REQUIRE(g->slots.size() == 2);
    CHECK(g->slots[0].off == 1);  // matched 'G', then abandoned at 'C' vs 'T'
    CHECK(g->slots[0].abandoned);
    CHECK(g->slots[1].off == 0);  // 'A' vs 'G' abandoned immediately
    CHECK(g->slots[1].abandoned);
}

TEST_CASE("wavefront: gap step opens new diagonals") {
    DString ds = parse_dstring("ACGT");
    WavefrontAligner aligner(ds, "ACT", kPen);
    aligner.align();

    const Wavefront& wf0 = aligner.wavefront(0);
    CHECK(wf0.lo == 0);
    CHECK(wf0.hi == 0);
    // at d = o + e the deletion diagonal k=+1 and insertion diagonal k=-1 open
    const Wavefront& wf3 = aligner.wavefront(3);
    CHECK(wf3.lo <= -1);
    CHECK(wf3.hi >= 1);
    CHECK(wf3.at(1, WfComp::D).max_offset() >= 0);
    CHECK(wf3.at(-1, WfComp::I).max_offset() >= 0);
}

TEST_CASE("wavefront: unreachable distances stay empty and are skipped") {
    // x=2, o=2, e=1: d=1 is not expressible from d=0
    Penalties pen{0, 2, 2, 1};
    DString ds = parse_dstring("AC");
    WavefrontAligner aligner(ds, "GC", pen);
    AlignmentResult r = aligner.align();
    CHECK(r.distance == 2);

    const Wavefront& wf1 = aligner.wavefront(1);
    bool any = false;
    for (std::int64_t k = wf1.lo; k <= wf1.hi; ++k) {
        for (WfComp c : {WfComp::M, WfComp::I, WfComp::D}) {
            if (wf1.at(k, c).max_offset() != kWfUnset) any = true;
        }
    }
    CHECK_FALSE(any);
}

TEST_CASE("wavefront: monotone offsets per diagonal and component") {
    DString ds = parse_dstring("GC[AA/CT]GG[A/T]C");
    std::string p = "GCATGGTC";
    WavefrontAligner aligner(ds, p, kPen);
    aligner.align();
    for (std::int64_t k = -static_cast<std::int64_t>(p.size());
         k <= static_cast<std::int64_t>(ds.width()); ++k) {
        for (WfComp c : {WfComp::M, WfComp::I, WfComp::D}) {
            WfOffset prev = kWfUnset;
            for (std::int64_t d = 0; d <= aligner.distance_reached(); ++d) {
                const Wavefront& wf = aligner.wavefront(d);
                if (!wf.covers(k)) continue;
                const WfOffset cur = wf.at(k, c).max_offset();
                if (cur == kWfUnset) continue;
                CHECK(cur >= prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("wavefront: work counter is linear for exact matches") {
    testutil::Rng rng(55);
    DString ds = testutil::random_dstring(rng, 400, 10, 3, 3);
    std::string p = testutil::random_member(rng, ds);
    WavefrontAligner aligner(ds, p, kPen);
    AlignmentResult r = aligner.align();
    CHECK(r.distance == 0);
    CHECK(r.stats.slot_writes <= 4 * ds.size() + 16);
}

TEST_CASE("wavefront: agrees with the brute-force oracle on random instances") {
    testutil::Rng rng(101);
    int done = 0;
    while (done < 700) {
        const std::size_t w = 1 + rng() % 24;
        DString ds = testutil::random_dstring(rng, w, 1 + static_cast<int>(rng() % 40), 3, 3);
        if (ds.member_count().value > 3000) continue;
        std::string p = testutil::perturb(rng, testutil::random_member(rng, ds),
                                          static_cast<int>(rng() % 4), static_cast<int>(rng() % 3));
        Penalties pen{0, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 4),
                      1 + static_cast<int>(rng() % 2)};
        check_against_oracle(ds, p, pen);
        ++done;
    }
}

TEST_CASE("wavefront: zero distance iff the pattern is a member") {
    testutil::Rng rng(72);
    for (int it = 0; it < 150; ++it) {
        DString ds = testutil::random_dstring(rng, 1 + rng() % 16, 35, 3, 2);
        std::string p = (it % 2 == 0) ? testutil::random_member(rng, ds)
                                      : testutil::perturb(rng, testutil::random_member(rng, ds), 1, 0);
        AlignmentResult r = wavefront_align(ds, p, kPen);
        CHECK((r.distance == 0) == ds.contains(p));
        CHECK(check_alignment(ds, p, kPen, r) == "");
    }
}

TEST_CASE("wavefront: substitution stability") {
    testutil::Rng rng(88);
    for (int it = 0; it < 120; ++it) {
        DString ds = testutil::random_dstring(rng, 4 + rng() % 10, 30, 3, 2);
        std::string p = testutil::perturb(rng, testutil::random_member(rng, ds), 1, 1);
        const long d0 = wavefront_align(ds, p, kPen).distance;
        std::string q = p;
        q[rng() % q.size()] = testutil::random_base(rng);
        const long d1 = wavefront_align(ds, q, kPen).distance;
        CHECK(std::abs(d1 - d0) <= kPen.x);
    }
}

TEST_CASE("wavefront: input validation") {
    DString ds = parse_dstring("ACGT");
    CHECK_THROWS_AS(wavefront_align(ds, "", kPen), std::invalid_argument);
    CHECK_THROWS_AS(wavefront_align(ds, "AC", Penalties{1, 1, 2, 1}), std::invalid_argument);
}
