#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "ebf/exactmath.hpp"

using namespace ebf;

namespace {

// quadratic brute-force oracle: every (a, b), 1 <= a <= b, bucketed by a^2+b^2
std::map<uint64_t, std::vector<std::pair<uint64_t, uint64_t>>> two_squares_table(uint64_t max_n) {
    std::map<uint64_t, std::vector<std::pair<uint64_t, uint64_t>>> table;
    for (uint64_t a = 1; a * a * 2 <= max_n; ++a)
        for (uint64_t b = a; a * a + b * b <= max_n; ++b)
            table[a * a + b * b].push_back({a, b});
    return table;
}

}  // namespace

TEST_CASE("intsqrt examples") {
    auto r0 = intsqrt(BigNat(0));
    CHECK(r0.root == BigNat(0));
    CHECK(r0.exact);

    auto r697 = intsqrt(BigNat(485809));
    CHECK(r697.root == BigNat(697));
    CHECK(r697.exact);

    auto r = intsqrt(BigNat(474993));
    CHECK(r.root == BigNat(689));
    CHECK(!r.exact);
}

TEST_CASE("intsqrt bracket invariant for n <= 10^6") {
    for (uint64_t n = 0; n <= 1000000; ++n) {
        uint64_t root = isqrt_u64(n);
        REQUIRE(root * root <= n);
        REQUIRE((root + 1) * (root + 1) > n);
    }
}

TEST_CASE("intsqrt on values beyond 64 bits") {
    BigNat big = BigNat::from_decimal("123456789123456789123456789");
    auto r = intsqrt(sq(big));
    CHECK(r.exact);
    CHECK(r.root == big);
    auto r2 = intsqrt(sq(big) + BigNat(1));
    CHECK(!r2.exact);
    CHECK(r2.root == big);
    auto r3 = intsqrt(sq(big) - BigNat(1));
    CHECK(!r3.exact);
    CHECK(r3.root == big - BigNat(1));
}

TEST_CASE("is_square_u64 residue filters do not reject squares") {
    for (uint64_t r = 0; r < 40000; r += 7) {
        uint64_t root = 0;
        CHECK(is_square_u64(r * r, &root));
        CHECK(root == r);
    }
    CHECK(!is_square_u64(485808));
    CHECK(is_square_u128(static_cast<u128>(UINT64_MAX) * UINT64_MAX));
}

TEST_CASE("gcd_all examples") {
    CHECK(gcd_all({BigNat(880), BigNat(2340), BigNat(4800)}) == BigNat(20));
    CHECK(gcd_all({BigNat(332384), BigNat(33660), BigNat(554880)}) == BigNat(68));
    CHECK(gcd_all({BigNat(7)}) == BigNat(7));
    CHECK_THROWS_AS(gcd_all({BigNat(0), BigNat(0)}), error);
    CHECK_THROWS_AS(gcd_all(std::span<const BigNat>{}), error);
}

TEST_CASE("gcd_all permutation and scaling invariance") {
    std::vector<BigNat> vals = {BigNat(44), BigNat(240), BigNat(117)};
    BigNat g = gcd_all(vals);
    std::vector<BigNat> perm = {BigNat(117), BigNat(44), BigNat(240)};
    CHECK(gcd_all(perm) == g);
    for (uint64_t k = 1; k <= 20; ++k) {
        std::vector<BigNat> scaled;
        for (const auto& v : vals) scaled.push_back(v * BigNat(k));
        CHECK(gcd_all(scaled) == g * BigNat(k));
    }
}

TEST_CASE("factorize examples") {
    auto f697 = factorize(BigNat(697));
    REQUIRE(f697.size() == 2);
    CHECK(f697[0].prime == BigNat(17));
    CHECK(f697[0].exponent == 1);
    CHECK(f697[1].prime == BigNat(41));
    CHECK(f697[1].exponent == 1);

    CHECK(factorize(BigNat(1)).empty());

    auto f1105 = factorize(BigNat(1105));
    REQUIRE(f1105.size() == 3);
    CHECK(f1105[0].prime == BigNat(5));
    CHECK(f1105[1].prime == BigNat(13));
    CHECK(f1105[2].prime == BigNat(17));

    CHECK_THROWS_AS(factorize(BigNat(0)), error);
}

TEST_CASE("factorize recomposes and sorts ascending") {
    for (uint64_t n = 1; n <= 5000; ++n) {
        BigNat recomposed(1);
        BigNat last(0);
        for (const auto& pp : factorize(BigNat(n))) {
            CHECK(last < pp.prime);
            last = pp.prime;
            for (unsigned e = 0; e < pp.exponent; ++e) recomposed = recomposed * pp.prime;
        }
        CHECK(recomposed == BigNat(n));
    }
    // a few larger ones through the Pollard path
    for (uint64_t n : {699967ull * 999983ull, 1000003ull * 1000003ull, 2ull * 3 * 5 * 7 * 1000003}) {
        BigNat recomposed(1);
        for (const auto& pp : factorize(BigNat(n)))
            for (unsigned e = 0; e < pp.exponent; ++e) recomposed = recomposed * pp.prime;
        CHECK(recomposed == BigNat(n));
    }
}

TEST_CASE("square_part") {
    CHECK(square_part(BigNat(1)) == BigNat(1));
    CHECK(square_part(BigNat(4)) == BigNat(2));
    CHECK(square_part(BigNat(400)) == BigNat(20));
    CHECK(square_part(BigNat(68 * 68)) == BigNat(68));
    CHECK(square_part(BigNat(12)) == BigNat(2));     // 12 = 2^2 * 3
    CHECK(square_part(BigNat(1350)) == BigNat(15));  // 1350 = 2 * 3^3 * 5^2
}

TEST_CASE("two_squares_reps examples") {
    auto r17 = two_squares_reps(BigNat(17));
    REQUIRE(r17.size() == 1);
    CHECK(r17[0].a == BigNat(1));
    CHECK(r17[0].b == BigNat(4));

    auto r697 = two_squares_reps(BigNat(697));
    REQUIRE(r697.size() == 2);
    CHECK(r697[0].a == BigNat(11));
    CHECK(r697[0].b == BigNat(24));
    CHECK(r697[1].a == BigNat(16));
    CHECK(r697[1].b == BigNat(21));

    CHECK(two_squares_reps(BigNat(3)).empty());
    CHECK(two_squares_reps(BigNat(25)).size() == 1);  // (3,4) only; a = 0 excluded

    auto r1105 = two_squares_reps(BigNat(1105));
    REQUIRE(r1105.size() == 4);
    CHECK(r1105[0].a == BigNat(4));
    CHECK(r1105[3].a == BigNat(23));
    CHECK(r1105[3].b == BigNat(24));
}

TEST_CASE("two_squares_reps matches quadratic oracle up to 20000") {
    const uint64_t limit = 20000;  // the acceptance suite pushes this to 10^5
    auto table = two_squares_table(limit);
    for (uint64_t n = 1; n <= limit; ++n) {
        auto reps = two_squares_reps(BigNat(n));
        auto it = table.find(n);
        size_t expected = it == table.end() ? 0 : it->second.size();
        REQUIRE(reps.size() == expected);
        if (it != table.end()) {
            for (size_t i = 0; i < reps.size(); ++i) {
                CHECK(reps[i].a == BigNat(it->second[i].first));
                CHECK(reps[i].b == BigNat(it->second[i].second));
            }
        }
    }
}

TEST_CASE("admissible hypotenuse") {
    CHECK(is_admissible_hypotenuse(BigNat(17)));
    CHECK(is_admissible_hypotenuse(BigNat(41)));
    CHECK(!is_admissible_hypotenuse(BigNat(697)));
    CHECK(!is_admissible_hypotenuse(BigNat(4)));
    CHECK(is_admissible_hypotenuse(BigNat(5)));
    CHECK(!is_admissible_hypotenuse(BigNat(1105)));
}

TEST_CASE("factor budget error is explicit") {
    // a 60+ digit semiprime is far beyond the trial-division budget
    BigNat p = BigNat::from_decimal("618970019642690137449562111");        // 2^89-1, prime
    BigNat q = BigNat::from_decimal("162259276829213363391578010288127");  // 2^107-1, prime
    CHECK_THROWS_AS(factorize(p * q), unfactored_error);
    // a big prime is still recognized
    auto fp = factorize(p);
    REQUIRE(fp.size() == 1);
    CHECK(fp[0].prime == p);
    CHECK(fp[0].exponent == 1);
}
