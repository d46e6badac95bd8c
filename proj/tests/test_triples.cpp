#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "ebf/triples.hpp"

using namespace ebf;

namespace {

// brute-force oracle: double loop over legs, primitive triples with hyp <= n
std::set<std::array<uint64_t, 3>> brute_force_primitive(uint64_t max_hyp) {
    std::set<std::array<uint64_t, 3>> out;
    for (uint64_t a = 1; a <= max_hyp; ++a)
        for (uint64_t b = a; b <= max_hyp; ++b) {
            uint64_t c;
            if (!is_square_u64(a * a + b * b, &c)) continue;
            if (c > max_hyp) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            uint64_t even = a % 2 == 0 ? a : b;
            uint64_t odd = a % 2 == 0 ? b : a;
            out.insert({even, odd, c});
        }
    return out;
}

}  // namespace

TEST_CASE("from_generators examples") {
    auto t = PythagoreanTriple::from_generators(GeneratorPair(BigNat(2), BigNat(1)));
    CHECK(t.even_leg() == BigNat(4));
    CHECK(t.odd_leg() == BigNat(3));
    CHECK(t.hyp() == BigNat(5));

    auto t2 = PythagoreanTriple::from_generators(GeneratorPair(BigNat(4), BigNat(1)));
    CHECK(t2.even_leg() == BigNat(8));
    CHECK(t2.odd_leg() == BigNat(15));
    CHECK(t2.hyp() == BigNat(17));

    auto t3 = PythagoreanTriple::from_generators(GeneratorPair(BigNat(5), BigNat(4)));
    CHECK(t3.even_leg() == BigNat(40));
    CHECK(t3.odd_leg() == BigNat(9));
    CHECK(t3.hyp() == BigNat(41));

    CHECK_THROWS_AS(GeneratorPair(BigNat(3), BigNat(3)), error);
    CHECK_THROWS_AS(GeneratorPair(BigNat(2), BigNat(0)), error);
    // equal parity generators make both legs even; no normalized form exists
    CHECK_THROWS_AS(PythagoreanTriple::from_generators(GeneratorPair(BigNat(3), BigNat(1))), error);
}

TEST_CASE("coprime opposite-parity generators give primitive triples") {
    for (uint64_t x = 2; x <= 40; ++x) {
        for (uint64_t y = 1 + (x % 2); y < x; y += 2) {
            if (std::gcd(x, y) != 1) continue;
            auto t = PythagoreanTriple::from_generators(GeneratorPair(BigNat(x), BigNat(y)));
            CHECK(t.is_primitive());
            auto red = reduce(t);
            CHECK(red.scale == BigNat(1));
            CHECK(red.primitive == t);
        }
    }
}

TEST_CASE("from_legs examples") {
    auto t = PythagoreanTriple::from_legs(BigNat(44), BigNat(117));
    CHECK(t.even_leg() == BigNat(44));
    CHECK(t.odd_leg() == BigNat(117));
    CHECK(t.hyp() == BigNat(125));

    auto t2 = PythagoreanTriple::from_legs(BigNat(3), BigNat(4));
    CHECK(t2.even_leg() == BigNat(4));
    CHECK(t2.odd_leg() == BigNat(3));
    CHECK(t2.hyp() == BigNat(5));

    CHECK_THROWS_AS(PythagoreanTriple::from_legs(BigNat(44), BigNat(100)), error);
    CHECK_THROWS_AS(PythagoreanTriple::from_legs(BigNat(6), BigNat(8)), error);

    // unnormalized escape hatch accepts equal parity
    Triangle raw = triangle_from_legs(BigNat(6), BigNat(8));
    CHECK(raw.hyp == BigNat(10));
}

TEST_CASE("reduce examples") {
    auto r1 = reduce(Triangle{BigNat(44), BigNat(240), BigNat(244)});
    CHECK(r1.primitive.even_leg() == BigNat(60));
    CHECK(r1.primitive.odd_leg() == BigNat(11));
    CHECK(r1.primitive.hyp() == BigNat(61));
    CHECK(r1.scale == BigNat(4));

    auto r2 = reduce(Triangle{BigNat(240), BigNat(117), BigNat(267)});
    CHECK(r2.primitive.even_leg() == BigNat(80));
    CHECK(r2.primitive.odd_leg() == BigNat(39));
    CHECK(r2.primitive.hyp() == BigNat(89));
    CHECK(r2.scale == BigNat(3));

    auto r3 = reduce(Triangle{BigNat(4), BigNat(3), BigNat(5)});
    CHECK(r3.scale == BigNat(1));
    CHECK(r3.primitive.even_leg() == BigNat(4));
}

TEST_CASE("scale examples") {
    auto t = PythagoreanTriple::from_legs(BigNat(8), BigNat(15));
    Triangle s = scale(t, BigNat(41));
    CHECK(s.leg1 == BigNat(328));
    CHECK(s.leg2 == BigNat(615));
    CHECK(s.hyp == BigNat(697));

    auto t2 = PythagoreanTriple::from_legs(BigNat(40), BigNat(9));
    Triangle s2 = scale(t2, BigNat(17));
    CHECK(s2.leg1 == BigNat(680));
    CHECK(s2.leg2 == BigNat(153));
    CHECK(s2.hyp == BigNat(697));

    Triangle s3 = scale(PythagoreanTriple::from_legs(BigNat(4), BigNat(3)), BigNat(1));
    CHECK(s3.leg1 == BigNat(4));
    CHECK_THROWS_AS(scale(t, BigNat(0)), error);
}

TEST_CASE("reduce of scale recovers the primitive and the factor") {
    auto prim = PythagoreanTriple::from_legs(BigNat(20), BigNat(21));
    for (uint64_t k = 1; k <= 100; ++k) {
        auto red = reduce(scale(prim, BigNat(k)));
        CHECK(red.scale == BigNat(k));
        CHECK(red.primitive == prim);
    }
}

TEST_CASE("enumerate_primitive small limits") {
    auto t5 = enumerate_primitive(5);
    REQUIRE(t5.size() == 1);
    CHECK(t5[0].even_leg() == BigNat(4));

    auto t17 = enumerate_primitive(17);
    REQUIRE(t17.size() == 3);
    CHECK(t17[0].hyp() == BigNat(5));
    CHECK(t17[1].hyp() == BigNat(13));
    CHECK(t17[1].even_leg() == BigNat(12));
    CHECK(t17[2].hyp() == BigNat(17));
    CHECK(t17[2].even_leg() == BigNat(8));

    auto t41 = enumerate_primitive(41);
    bool has_40_9_41 = false, has_12_35_37 = false;
    for (const auto& t : t41) {
        if (t.even_leg() == BigNat(40) && t.odd_leg() == BigNat(9)) has_40_9_41 = true;
        if (t.even_leg() == BigNat(12) && t.odd_leg() == BigNat(35)) has_12_35_37 = true;
    }
    CHECK(has_40_9_41);
    CHECK(has_12_35_37);

    CHECK(enumerate_primitive(4).empty());
}

TEST_CASE("enumerate_primitive matches leg brute force up to 500") {
    auto expected = brute_force_primitive(500);
    auto got = enumerate_primitive(500);
    REQUIRE(got.size() == expected.size());
    std::set<std::array<uint64_t, 3>> got_set;
    for (const auto& t : got) {
        CHECK(sq(t.even_leg()) + sq(t.odd_leg()) == sq(t.hyp()));
        CHECK(t.is_primitive());
        got_set.insert({t.even_leg().to_u64(), t.odd_leg().to_u64(), t.hyp().to_u64()});
    }
    CHECK(got_set == expected);
}

TEST_CASE("enumerate_primitive order is deterministic: hyp then even leg") {
    auto ts = enumerate_primitive(1000);
    for (size_t i = 1; i < ts.size(); ++i) {
        bool ordered = ts[i - 1].hyp() < ts[i].hyp() ||
                       (ts[i - 1].hyp() == ts[i].hyp() &&
                        ts[i - 1].even_leg() < ts[i].even_leg());
        REQUIRE(ordered);
    }
}

TEST_CASE("triple constructor validates") {
    CHECK_THROWS_AS(PythagoreanTriple(BigNat(4), BigNat(4), BigNat(5)), error);   // parity
    CHECK_THROWS_AS(PythagoreanTriple(BigNat(4), BigNat(3), BigNat(6)), error);   // relation
    CHECK_THROWS_AS(PythagoreanTriple(BigNat(0), BigNat(3), BigNat(3)), error);   // zero leg
}
