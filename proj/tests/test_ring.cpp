#include <doctest.h>

#include "nsatz/ring.hpp"
#include "testutil.hpp"

using namespace nsatz;
using testutil::Rng;

TEST_CASE("ring construction and parsing") {
    CHECK(RingSpec::parse("Z").kind() == RingKind::Integers);
    CHECK(RingSpec::parse("Q").kind() == RingKind::Rationals);
    CHECK(RingSpec::parse("Fp:7").modulus() == 7);
    CHECK(RingSpec::parse("Zn:12").modulus() == 12);
    CHECK(RingSpec::parse("Zn:12").to_string() == "Zn:12");

    CHECK_THROWS_AS(RingSpec::prime_field(12), InvalidRing);
    CHECK_THROWS_AS(RingSpec::prime_field(1), InvalidRing);
    CHECK_THROWS_AS(RingSpec::residue_ring(1), InvalidRing);
    CHECK_THROWS_AS(RingSpec::parse("Fp:9"), InvalidRing);
    CHECK_THROWS_AS(RingSpec::parse("Fp:x"), ParseError);
    CHECK_THROWS_AS(RingSpec::parse("GF:7"), ParseError);

    CHECK(RingSpec::parse("Zn:12") == RingSpec::residue_ring(12));
    CHECK(RingSpec::parse("Zn:12") != RingSpec::parse("Zn:13"));
    CHECK(RingSpec::parse("Zn:7") != RingSpec::parse("Fp:7"));
}

TEST_CASE("canonical arithmetic") {
    RingSpec z12 = RingSpec::residue_ring(12);
    CHECK(z12.from_integer(7) + z12.from_integer(8) == z12.from_integer(3));
    CHECK((z12.from_integer(14)) == z12.from_integer(2));
    CHECK(z12.from_integer(14).to_string() == "2");

    RingSpec q = RingSpec::rationals();
    CHECK(q.from_fraction(1, 2) + q.from_fraction(1, 2) == q.one());
    CHECK(q.from_fraction(3, 6).to_string() == "1/2");
    CHECK(q.from_fraction(3, -6).to_string() == "-1/2");

    RingSpec z = RingSpec::integers();
    CHECK(z.from_integer(5) * z.zero() == z.zero());

    RingSpec f7 = RingSpec::prime_field(7);
    CHECK(f7.from_integer(-1) == f7.from_integer(6));

    CHECK_THROWS_AS(z.one() + q.one(), RingMismatch);
}

TEST_CASE("units and inverses") {
    RingSpec z12 = RingSpec::residue_ring(12);
    CHECK(is_unit(z12.from_integer(5)));
    CHECK_FALSE(is_unit(z12.from_integer(4)));
    CHECK(invert(z12.from_integer(5)) == z12.from_integer(5));
    CHECK_THROWS_AS(invert(z12.from_integer(4)), NotAUnit);

    RingSpec f7 = RingSpec::prime_field(7);
    CHECK(invert(f7.from_integer(3)) == f7.from_integer(5));

    RingSpec z = RingSpec::integers();
    CHECK(is_unit(z.one()));
    CHECK(is_unit(z.from_integer(-1)));
    CHECK_FALSE(is_unit(z.from_integer(2)));

    RingSpec q = RingSpec::rationals();
    CHECK(invert(q.from_integer(2)) == q.from_fraction(1, 2));
    CHECK_THROWS_AS(invert(q.zero()), NotAUnit);
}

TEST_CASE("value parsing") {
    RingSpec q = RingSpec::rationals();
    CHECK(q.value_from_string("3/2") == q.from_fraction(3, 2));
    CHECK(q.value_from_string("-4") == q.from_integer(-4));
    CHECK_THROWS_AS(q.value_from_string("a"), ParseError);
    CHECK_THROWS_AS(q.value_from_string("1/"), ParseError);

    RingSpec f7 = RingSpec::prime_field(7);
    CHECK(f7.value_from_string("3/2") == f7.from_integer(5)); // 3 * 2^-1 = 3*4 = 12 = 5

    RingSpec z = RingSpec::integers();
    CHECK_THROWS_AS(z.value_from_string("1/2"), NotAUnit);
}

TEST_CASE("ring axioms hold exactly on random elements") {
    Rng rng(20240811);
    for (const char* spec : {"Z", "Q", "Fp:7", "Zn:12", "Zn:4"}) {
        RingSpec ring = RingSpec::parse(spec);
        for (int i = 0; i < 200; ++i) {
            RingValue a = testutil::random_value(rng, ring);
            RingValue b = testutil::random_value(rng, ring);
            RingValue c = testutil::random_value(rng, ring);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == ring.zero());
            CHECK(a - b == a + (-b));
            if (is_unit(a)) CHECK(a * invert(a) == ring.one());
        }
    }
}

TEST_CASE("unit detection in Z/nZ matches the zero-divisor dichotomy") {
    for (long n : {4L, 6L, 12L, 9L}) {
        RingSpec ring = RingSpec::residue_ring(n);
        for (long a = 0; a < n; ++a) {
            RingValue v = ring.from_integer(a);
            bool zero_or_divisor = false;
            if (v.is_zero()) {
                zero_or_divisor = true;
            } else {
                for (long b = 1; b < n && !zero_or_divisor; ++b)
                    if ((v * ring.from_integer(b)).is_zero()) zero_or_divisor = true;
            }
            CHECK(is_unit(v) != zero_or_divisor);
        }
    }
}

TEST_CASE("from_integer is a ring homomorphism") {
    Rng rng(77);
    for (const char* spec : {"Z", "Q", "Fp:13", "Zn:12"}) {
        RingSpec ring = RingSpec::parse(spec);
        for (int i = 0; i < 100; ++i) {
            long x = testutil::rand_int(rng, -50, 50), y = testutil::rand_int(rng, -50, 50);
            CHECK(ring.from_integer(x + y) == ring.from_integer(x) + ring.from_integer(y));
            CHECK(ring.from_integer(x * y) == ring.from_integer(x) * ring.from_integer(y));
        }
    }
}

TEST_CASE("pow with the 0^0 = 1 convention") {
    RingSpec z12 = RingSpec::residue_ring(12);
    CHECK(pow(z12.zero(), 0) == z12.one());
    CHECK(pow(z12.from_integer(5), 2) == z12.one());
    CHECK(pow(z12.from_integer(2), 10) == z12.from_integer(1024 % 12));
}
