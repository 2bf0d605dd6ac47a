#include "doctest.h"

#include "dsalign/oracle.hpp"
#include "dsalign/poa.hpp"
#include "helpers.hpp"

using namespace dsalign;

TEST_CASE("poa linear: worked examples") {
    // the two-variant instance depicted with scores 0/1/2
    DString ds = parse_dstring("AC[GC/AT]A");
    PoaResult r = poa_align_linear(ds, "ACGTA", 0, 1, 2);
    CHECK(r.distance == 1);

    DString solid = parse_dstring("ACGTACGT");
    CHECK(poa_align_linear(solid, "ACGTACGT", 0, 1, 2).distance == 0);

    CHECK(poa_align_linear(parse_dstring("[A/C]"), "G", 0, 1, 2).distance == 1);
}

TEST_CASE("poa linear: table boundaries and shape") {
    DString ds = parse_dstring("A[CG/TT]C");
    PoaResult r = poa_align_linear(ds, "ACG", 0, 1, 2);
    const TupleDpTable& t = r.table;
    REQUIRE(t.rows() == ds.width() + 1);
    REQUIRE(t.cols() == 4);

    CHECK(t.at(0, 0) == std::vector<long>{0});
    for (std::size_t v = 1; v < t.cols(); ++v) {
        CHECK(t.at(0, v) == std::vector<long>{static_cast<long>(v) * 2});
    }
    for (std::size_t u = 1; u < t.rows(); ++u) {
        const std::size_t s = ds.column(u - 1).s();
        CHECK(t.at(u, 0) == std::vector<long>(s, static_cast<long>(u) * 2));
        for (std::size_t v = 1; v < t.cols(); ++v) {
            CHECK(t.at(u, v).size() == s);
        }
    }
}

TEST_CASE("poa linear: agrees with the affine oracle when one short gap suffices") {
    // with g = o + e a single isolated gap costs the same under both models
    testutil::Rng rng(29);
    int done = 0;
    while (done < 80) {
        dsalign::Penalties pen{0, 1, 2, 1};
        DString ds = testutil::random_dstring(rng, 6 + rng() % 10, 25, 3, 2);
        if (ds.member_count().value > 500) continue;
        std::string p = testutil::random_member(rng, ds);
        const std::size_t pos = rng() % p.size();
        if (rng() % 2 == 0 && p.size() > 1) {
            p.erase(pos, 1);
        } else {
            p.insert(pos, 1, testutil::random_base(rng));
        }
        const long affine = dsalign::oracle_affine(ds, p, pen, 1000).distance;
        if (affine > pen.o + pen.e) continue;  // optimum is not a single isolated gap
        CHECK(poa_align_linear(ds, p, 0, pen.x, pen.o + pen.e).distance == affine);
        ++done;
    }
}

TEST_CASE("poa linear: equals min-over-members NW") {
    testutil::Rng rng(23);
    int done = 0;
    while (done < 600) {
        DString ds = testutil::random_dstring(rng, 1 + rng() % 14, 40, 3, 3);
        if (ds.member_count().value > 500) continue;
        std::string p = testutil::perturb(rng, testutil::random_member(rng, ds),
                                          static_cast<int>(rng() % 4), static_cast<int>(rng() % 3));
        const int x = 1 + static_cast<int>(rng() % 2);
        const int g = 1 + static_cast<int>(rng() % 3);
        const long expect = testutil::min_member_nw(ds, p, 0, x, g);
        CHECK(poa_align_linear(ds, p, 0, x, g).distance == expect);
        ++done;
    }
}
