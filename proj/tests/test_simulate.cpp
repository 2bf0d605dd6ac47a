#include "doctest.h"

#include "dsalign/oracle.hpp"
#include "dsalign/simulate.hpp"
#include "dsalign/wavefront.hpp"
#include "helpers.hpp"

using namespace dsalign;

TEST_CASE("generate: width is exact and the size formula holds") {
    SimSpec spec{10000, 0.01, 2, 1, 7};
    DString ds = generate_dstring(spec);
    CHECK(ds.width() == 10000);
    // with S=2, L=1 every window adds exactly one character
    CHECK(ds.size() == 10100);

    std::size_t n = ds.width();
    for (const auto& l : ds.letters()) {
        if (l.s() > 1) n += (l.s() - 1) * l.ell();
    }
    CHECK(n == ds.size());

    SimSpec pure{100, 0.0, 2, 1, 3};
    DString solid = generate_dstring(pure);
    CHECK(solid.width() == 100);
    CHECK(solid.size() == 100);
    CHECK(solid.member_count().value == 1);
}

TEST_CASE("generate: degenerate letters are non-adjacent with distinct variants") {
    SimSpec spec{500, 0.1, 4, 3, 99};
    DString ds = generate_dstring(spec);
    CHECK(ds.width() == 500);
    bool prev_deg = false;
    std::size_t windows = 0;
    for (const auto& l : ds.letters()) {
        const bool deg = l.s() > 1;
        if (deg) {
            ++windows;
            CHECK_FALSE(prev_deg);
            CHECK(l.s() >= 2);
            CHECK(l.s() <= 4);
            CHECK(l.ell() <= 3);
            for (std::size_t a = 0; a < l.s(); ++a) {
                for (std::size_t b = a + 1; b < l.s(); ++b) {
                    CHECK(l.variants[a] != l.variants[b]);
                }
            }
        }
        prev_deg = deg;
    }
    CHECK(windows == 50);
}

TEST_CASE("generate: deterministic and seed-sensitive") {
    SimSpec spec{300, 0.05, 3, 2, 42};
    CHECK(generate_dstring(spec) == generate_dstring(spec));
    SimSpec other = spec;
    other.seed = 43;
    CHECK_FALSE(generate_dstring(spec) == generate_dstring(other));
}

TEST_CASE("generate: infeasible specs are rejected") {
    SimSpec spec{10, 0.9, 2, 4, 1};
    CHECK_THROWS_AS(generate_dstring(spec), std::invalid_argument);
    // g*W windows of length 1 with separators can also overflow the width
    SimSpec tight{10, 0.8, 2, 1, 1};
    CHECK_THROWS_AS(generate_dstring(tight), std::invalid_argument);
}

TEST_CASE("extract_member: always a member, deterministic") {
    SimSpec spec{200, 0.1, 3, 2, 5};
    DString ds = generate_dstring(spec);
    std::string m1 = extract_member(ds, 11);
    CHECK(m1.size() == ds.width());
    CHECK(ds.contains(m1));
    CHECK(extract_member(ds, 11) == m1);

    DString solid = parse_dstring("ACGT");
    CHECK(extract_member(solid, 1) == "ACGT");
}

TEST_CASE("mutate_snps") {
    std::string p0(1000, 'A');
    SnpResult none = mutate_snps(p0, 0.0, 1);
    CHECK(none.pattern == p0);
    CHECK(none.changed == 0);

    SnpResult r = mutate_snps(p0, 0.01, 2);
    CHECK(r.events.size() == 10);
    CHECK(r.pattern.size() == p0.size());
    CHECK(mutate_snps(p0, 0.01, 2).pattern == r.pattern);

    std::size_t diff = 0;
    for (std::size_t i = 0; i < p0.size(); ++i) {
        if (r.pattern[i] != p0[i]) ++diff;
    }
    CHECK(diff == r.changed);
    CHECK(r.changed <= 10);
    // positions are distinct
    for (std::size_t i = 1; i < r.events.size(); ++i) {
        CHECK(r.events[i - 1].pos < r.events[i].pos);
    }
}

TEST_CASE("mutate_indels") {
    testutil::Rng seed_rng(17);
    std::string p0 = testutil::random_string(seed_rng, 2000);
    IndelResult none = mutate_indels(p0, 0.0, 1);
    CHECK(none.pattern == p0);
    CHECK(none.events.empty());

    IndelResult r = mutate_indels(p0, 0.005, 3);
    CHECK(r.events.size() == 10);
    CHECK(mutate_indels(p0, 0.005, 3).pattern == r.pattern);
    CHECK(r.pattern.size() == p0.size() + r.inserted_bases - r.deleted_bases);

    std::size_t ins = 0, del = 0;
    for (const auto& ev : r.events) {
        CHECK(ev.bases.size() >= 1);
        CHECK(ev.bases.size() <= 3);
        (ev.insertion ? ins : del) += ev.bases.size();
    }
    CHECK(ins == r.inserted_bases);
    CHECK(del == r.deleted_bases);
}

TEST_CASE("planted divergence is recovered by the aligner") {
    // solid text: each separated indel event must come back as one gap run
    testutil::Rng seed_rng(23);
    std::string base = testutil::random_string(seed_rng, 400);
    DString ds = parse_dstring(base);
    Penalties pen{0, 1, 2, 1};

    IndelResult ind = mutate_indels(base, 0.01, 9);
    REQUIRE(ind.events.size() == 4);
    AlignmentResult r = wavefront_align(ds, ind.pattern, pen);
    EventSummary s = summarize(r.events);
    CHECK(s.mismatches == 0);
    CHECK(r.gap_opens == ind.events.size());
    CHECK(s.insertions == ind.inserted_bases);
    CHECK(s.deletions == ind.deleted_bases);
    CHECK(check_alignment(ds, ind.pattern, pen, r) == "");

    // SNP-only divergence on a generated D-string: no gaps, d == X
    SimSpec spec{600, 0.05, 3, 2, 77};
    DString gen = generate_dstring(spec);
    std::string member = extract_member(gen, 5);
    SnpResult snp = mutate_snps(member, 0.01, 6);
    AlignmentResult rs = wavefront_align(gen, snp.pattern, pen);
    EventSummary ss = summarize(rs.events);
    CHECK(ss.insertions == 0);
    CHECK(ss.deletions == 0);
    CHECK(ss.mismatches <= snp.changed);
    CHECK(rs.distance == static_cast<long>(ss.mismatches) * pen.x);
    CHECK(ss.matches == gen.width() - ss.mismatches);
    CHECK(check_alignment(gen, snp.pattern, pen, rs) == "");
}

TEST_CASE("generated instances satisfy construction invariants") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SimSpec spec{80 + 5 * static_cast<std::size_t>(seed % 7), 0.08, 3, 2, seed};
        DString ds = generate_dstring(spec);
        CHECK(ds.width() == spec.width);
        CHECK(ds.size() >= ds.width());
        std::string member = extract_member(ds, seed * 31 + 1);
        CHECK(ds.contains(member));
    }
}
