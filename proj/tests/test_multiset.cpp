#include <doctest.h>

#include "nsatz/multiset.hpp"
#include "nsatz/parse.hpp"
#include "testutil.hpp"

using namespace nsatz;
using testutil::Rng;

namespace {

Multiset ms_of(const RingSpec& ring, std::vector<std::pair<long, int>> spec) {
    std::vector<Multiset::Entry> entries;
    for (auto [v, m] : spec) entries.push_back({ring.from_integer(v), m});
    return Multiset::create(ring, std::move(entries));
}

} // namespace

TEST_CASE("multiset size") {
    RingSpec z = RingSpec::integers();
    CHECK(ms_of(z, {{0, 1}, {1, 2}}).size() == 3);
    CHECK(ms_of(z, {{0, 1}}).size() == 1);
    RingSpec f5 = RingSpec::prime_field(5);
    CHECK(ms_of(f5, {{0, 1}, {1, 1}, {2, 1}}).size() == 3);
}

TEST_CASE("unit difference checking in Z/6") {
    RingSpec z6 = RingSpec::residue_ring(6);
    std::vector<RingValue> elems = {z6.zero(), z6.one(), z6.from_integer(3)};
    ViolatingPairs bad = check_unit_differences(elems);
    REQUIRE(bad.size() == 2);
    CHECK(bad[0].first == z6.zero());
    CHECK(bad[0].second == z6.from_integer(3));
    CHECK(bad[1].first == z6.one());
    CHECK(bad[1].second == z6.from_integer(3));

    RingSpec z4 = RingSpec::residue_ring(4);
    CHECK(check_unit_differences({z4.zero(), z4.one()}).empty());
    CHECK(check_unit_differences({z4.from_integer(2)}).empty());
}

TEST_CASE("construction rejects violating pairs and reports them exactly") {
    RingSpec z6 = RingSpec::residue_ring(6);
    std::vector<Multiset::Entry> entries = {
        {z6.zero(), 1}, {z6.one(), 1}, {z6.from_integer(3), 1}};
    try {
        Multiset::create(z6, entries);
        FAIL("expected UnitDifferenceViolation");
    } catch (const UnitDifferenceViolation& e) {
        std::vector<RingValue> elems = {z6.zero(), z6.one(), z6.from_integer(3)};
        CHECK(e.pairs() == check_unit_differences(elems));
    }

    CHECK_THROWS_AS(ms_of(z6, {{0, 1}, {6, 1}}), HypothesisViolation); // duplicate 0 = 6
    CHECK_THROWS_AS(ms_of(z6, {{0, 0}}), HypothesisViolation);
    CHECK_THROWS_AS(Multiset::create(z6, {}), HypothesisViolation);
}

TEST_CASE("vanishing polynomial") {
    RingSpec z = RingSpec::integers();
    CHECK(vanishing_poly(ms_of(z, {{0, 1}, {1, 1}}), 1, 1) == parse_poly("x1^2 - x1", z));
    CHECK(vanishing_poly(ms_of(z, {{0, 2}}), 1, 1) == parse_poly("x1^2", z));
    CHECK(vanishing_poly(ms_of(z, {{0, 1}, {1, 2}}), 1, 1) ==
          parse_poly("x1^3 - 2*x1^2 + x1", z));
    // embedded as x2 inside a 2-variable ring
    CHECK(vanishing_poly(ms_of(z, {{0, 1}, {1, 1}}), 2, 2) ==
          parse_poly("x2^2 - x2", z, {.nvars = 2}));
    CHECK_THROWS_AS(vanishing_poly(ms_of(z, {{0, 1}}), 2, 1), std::out_of_range);
}

TEST_CASE("vanishing polynomial properties on random multisets") {
    Rng rng(3131);
    for (const char* spec : {"Q", "Fp:7", "Zn:12", "Z"}) {
        RingSpec ring = RingSpec::parse(spec);
        for (int trial = 0; trial < 20; ++trial) {
            Multiset ms = testutil::random_multiset(rng, ring, testutil::rand_int(rng, 1, 3), 3);
            MultivarPoly g = vanishing_poly(ms, 1, 1);
            CHECK(g.total_degree() == Degree(ms.size()));
            CHECK(g.coefficient_of({ms.size()}) == ring.one()); // monic
            for (const auto& e : ms.entries())
                CHECK(g.evaluate({e.element}).is_zero());
        }
    }
}

TEST_CASE("grid point enumeration") {
    RingSpec z = RingSpec::integers();
    Grid g({ms_of(z, {{0, 1}, {1, 1}}), ms_of(z, {{0, 1}, {1, 1}})});
    auto pts = g.points();
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].coords[0] == z.zero());
    CHECK(pts[0].coords[1] == z.zero());
    CHECK(pts[1].coords[0] == z.zero());
    CHECK(pts[1].coords[1] == z.one());
    CHECK(pts[3].coords[0] == z.one());
    for (const auto& p : pts) CHECK(p.mults == ExpVec{1, 1});

    Grid single({ms_of(z, {{0, 2}}), ms_of(z, {{1, 3}})});
    auto sp = single.points();
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].mults == ExpVec{2, 3});
    CHECK(exp_sum(sp[0].mults) == 5);

    RingSpec q = RingSpec::rationals();
    CHECK_THROWS_AS(Grid({ms_of(z, {{0, 1}}), ms_of(q, {{0, 1}})}), RingMismatch);
    CHECK_THROWS_AS(Grid({}), ArityMismatch);
}
