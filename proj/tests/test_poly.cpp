#include <doctest.h>

#include "nsatz/parse.hpp"
#include "nsatz/poly.hpp"
#include "testutil.hpp"

using namespace nsatz;
using testutil::Rng;

namespace {
const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();
} // namespace

TEST_CASE("degree bookkeeping") {
    MultivarPoly p = parse_poly("x1^2*x2 + x1", Z);
    CHECK(p.total_degree() == Degree(3));
    CHECK(p.degree_in(1) == Degree(2));
    CHECK(p.degree_in(2) == Degree(1));

    MultivarPoly zero(Z, 2);
    CHECK(zero.total_degree() == Degree::minus_infinity());
    CHECK(zero.degree_in(1) == Degree::minus_infinity());
    CHECK(Degree::minus_infinity() < Degree(-1000000));
    CHECK(Degree::minus_infinity() - 5 == Degree::minus_infinity());

    MultivarPoly five = MultivarPoly::constant(Z.from_integer(5), 1);
    CHECK(five.total_degree() == Degree(0));

    CHECK_THROWS_AS(p.degree_in(3), std::out_of_range);
}

TEST_CASE("arithmetic basics") {
    MultivarPoly a = parse_poly("x1 + 1", Z);
    MultivarPoly b = parse_poly("x1 - 1", Z);
    CHECK(a * b == parse_poly("x1^2 - 1", Z));

    MultivarPoly p = parse_poly("x1 + x2", Z);
    CHECK(p + MultivarPoly::zero(Z, 2) == p);
    CHECK((p * MultivarPoly::zero(Z, 2)).is_zero());
    CHECK(p - p == MultivarPoly::zero(Z, 2));

    CHECK_THROWS_AS(p + MultivarPoly::zero(Z, 3), ArityMismatch);
    CHECK_THROWS_AS(p + MultivarPoly::zero(Q, 2), RingMismatch);
}

TEST_CASE("coefficient extraction") {
    MultivarPoly p = parse_poly("3*x1*x2 + x1", Z);
    CHECK(p.coefficient_of({1, 1}) == Z.from_integer(3));
    CHECK(p.coefficient_of({0, 1}) == Z.zero());
    CHECK(parse_poly("x1^2-1", Z).coefficient_of({0}) == Z.from_integer(-1));
}

TEST_CASE("evaluation") {
    MultivarPoly p = parse_poly("x1*x2", Z);
    CHECK(p.evaluate({Z.one(), Z.one()}) == Z.one());

    MultivarPoly q = parse_poly("x1^2 - x1", Z);
    CHECK(q.evaluate({Z.zero()}) == Z.zero());
    CHECK(q.evaluate({Z.one()}) == Z.zero());

    RingSpec z4 = RingSpec::residue_ring(4);
    MultivarPoly r = parse_poly("x1 + x2", z4);
    CHECK(r.evaluate({z4.from_integer(2), z4.from_integer(3)}) == z4.one());
}

TEST_CASE("expansion at a base point") {
    MultivarPoly p = parse_poly("x1^2", Z);
    ExpansionTable t = expand_at(p, {Z.one()}, {3});
    CHECK(t.coeff({0}) == Z.one());
    CHECK(t.coeff({1}) == Z.from_integer(2));
    CHECK(t.coeff({2}) == Z.one());

    // shift by zero: the table is the coefficient map itself
    MultivarPoly q = parse_poly("3*x1^2*x2 - x2 + 4", Z);
    ExpansionTable t0 = expand_at(q, {Z.zero(), Z.zero()}, {1, 1});
    for (const auto& [e, c] : q.terms()) CHECK(t0.coeff(e) == c);

    MultivarPoly r = parse_poly("x1*x2", Z);
    ExpansionTable t11 = expand_at(r, {Z.one(), Z.one()}, {2, 2});
    CHECK(t11.coeff({1, 1}) == Z.one());
    CHECK(t11.coeff({0, 0}) == Z.one());

    // consistency: coeffs[0] is the evaluation
    CHECK(t11.coeff({0, 0}) == r.evaluate({Z.one(), Z.one()}));
}

TEST_CASE("single expansion coefficient agrees with the direct formula") {
    MultivarPoly p = parse_poly("x1^2", Z);
    CHECK(single_expansion_coeff(p, {Z.one()}, {1}) == Z.from_integer(2));

    // |u| > deg p kills every binomial
    CHECK(single_expansion_coeff(p, {Z.from_integer(5)}, {3}) == Z.zero());

    MultivarPoly c = MultivarPoly::constant(Z.from_integer(9), 2);
    CHECK(single_expansion_coeff(c, {Z.from_integer(3), Z.from_integer(-2)}, {0, 0}) ==
          Z.from_integer(9));
}

TEST_CASE("expansion properties on random polynomials") {
    Rng rng(424242);
    for (const char* spec : {"Z", "Q", "Fp:7", "Zn:12"}) {
        RingSpec ring = RingSpec::parse(spec);
        for (int trial = 0; trial < 25; ++trial) {
            int nvars = testutil::rand_int(rng, 1, 3);
            MultivarPoly p = testutil::random_poly(rng, ring, nvars, 5, 6);
            std::vector<RingValue> s = testutil::random_point(rng, ring, nvars);
            ExpVec bounds(nvars, 6);
            ExpansionTable table = expand_at(p, s, bounds);

            // round-trip: sum f_u(s) (x-s)^u == p
            CHECK(testutil::reassemble_expansion(table, ring) == p);

            // agreement of both computation routes on every stored u and a few zeros
            for (const auto& [u, c] : table.coeffs())
                CHECK(single_expansion_coeff(p, s, u) == c);
            ExpVec probe(nvars, 0);
            probe[0] = 7;
            CHECK(single_expansion_coeff(p, s, probe) == table.coeff(probe));
        }
    }
}

TEST_CASE("top-degree expansion coefficients do not depend on the base point") {
    Rng rng(99);
    for (const char* spec : {"Q", "Zn:12"}) {
        RingSpec ring = RingSpec::parse(spec);
        for (int trial = 0; trial < 20; ++trial) {
            int nvars = testutil::rand_int(rng, 1, 3);
            MultivarPoly p = testutil::random_poly(rng, ring, nvars, 4, 5);
            if (p.is_zero()) continue;
            int deg = p.total_degree().value();
            std::vector<RingValue> s1 = testutil::random_point(rng, ring, nvars);
            std::vector<RingValue> s2 = testutil::random_point(rng, ring, nvars);
            for (const auto& [u, c] : p.terms()) {
                if (exp_sum(u) != deg) continue;
                CHECK(single_expansion_coeff(p, s1, u) == c);
                CHECK(single_expansion_coeff(p, s2, u) == c);
            }
        }
    }
}

TEST_CASE("evaluation is multiplicative") {
    Rng rng(512);
    for (const char* spec : {"Z", "Fp:5", "Zn:6"}) {
        RingSpec ring = RingSpec::parse(spec);
        for (int trial = 0; trial < 30; ++trial) {
            int nvars = testutil::rand_int(rng, 1, 3);
            MultivarPoly p = testutil::random_poly(rng, ring, nvars, 3, 4);
            MultivarPoly q = testutil::random_poly(rng, ring, nvars, 3, 4);
            std::vector<RingValue> s = testutil::random_point(rng, ring, nvars);
            CHECK((p * q).evaluate(s) == p.evaluate(s) * q.evaluate(s));
            CHECK((p + q).evaluate(s) == p.evaluate(s) + q.evaluate(s));
        }
    }
}

TEST_CASE("text rendering") {
    CHECK(parse_poly("3*x1^2*x2 - x1 + 4", Z).to_string() == "3*x1^2*x2 - x1 + 4");
    CHECK(MultivarPoly::zero(Z, 2).to_string() == "0");
    CHECK(parse_poly("-x1", Z).to_string() == "-x1");
    CHECK(parse_poly("3/2*x1", Q).to_string() == "3/2*x1");
}
