#include <catch_amalgamated.hpp>

#include "rhind/core.hpp"

using namespace rhind;

TEST_CASE("verify_identity on table decompositions") {
    CHECK(verify_identity({TargetFraction(2, 9), {6, 18}}));
    CHECK(verify_identity({TargetFraction(2, 95), {90, 190, 285, 855}}));
    CHECK_FALSE(verify_identity({TargetFraction(2, 9), {6, 19}}));
}

TEST_CASE("verify_identity ignores input order of parts") {
    CHECK(verify_identity({TargetFraction(2, 95), {855, 90, 285, 190}}));
}

TEST_CASE("scale_decomposition divides a decomposition by f") {
    const Decomposition d19{TargetFraction(2, 19), {12, 76, 114}};
    const Decomposition scaled = scale_decomposition(d19, 5);
    CHECK(scaled.target() == TargetFraction(2, 95));
    CHECK(scaled.parts() == std::vector<Int>{60, 380, 570});
    CHECK(verify_identity(scaled));

    const Decomposition d5{TargetFraction(2, 5), {3, 15}};
    CHECK(scale_decomposition(d5, 13).parts() == std::vector<Int>{39, 195});

    CHECK(scale_decomposition(d5, 1) == d5);
    CHECK_THROWS_AS(scale_decomposition(d5, 0), std::invalid_argument);
}

TEST_CASE("scaling preserves validity for every f in 1..50") {
    const std::vector<Decomposition> seeds{
        {TargetFraction(2, 3), {2, 6}},
        {TargetFraction(2, 11), {6, 66}},
        {TargetFraction(2, 19), {12, 76, 114}},
        {TargetFraction(3, 5), {2, 10}},
    };
    for (const Decomposition& d : seeds) {
        REQUIRE(verify_identity(d));
        for (Int f = 1; f <= 50; ++f) CHECK(verify_identity(scale_decomposition(d, f)));
    }
}

TEST_CASE("all_even_parts") {
    CHECK(all_even_parts({TargetFraction(2, 77), {44, 308}}));
    CHECK_FALSE(all_even_parts({TargetFraction(2, 77), {63, 99}}));
    CHECK_FALSE(all_even_parts({TargetFraction(2, 95), {57, 285}}));
}

TEST_CASE("construction rejects malformed decompositions") {
    CHECK_THROWS_AS(Decomposition(TargetFraction(2, 15), {15, 15}), std::invalid_argument);
    CHECK_THROWS_AS(Decomposition(TargetFraction(2, 15), std::vector<Int>{}), std::invalid_argument);
    CHECK_THROWS_AS(Decomposition(TargetFraction(2, 15), {0, 4}), std::invalid_argument);
    CHECK_THROWS_AS(TargetFraction(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(TargetFraction(5, 3), std::invalid_argument);
}

TEST_CASE("decomposition equality is multiset equality of parts") {
    const Decomposition a{TargetFraction(2, 9), {18, 6}};
    const Decomposition b{TargetFraction(2, 9), {6, 18}};
    CHECK(a == b);
}

TEST_CASE("out-of-range arithmetic is rejected, not wrapped") {
    const Int big = Int{1} << 62;
    CHECK_THROWS_AS(checked_mul(big, 4), std::overflow_error);
    const Decomposition d{TargetFraction(2, 3), {2, 6}};
    CHECK_THROWS_AS(scale_decomposition(d, big), std::overflow_error);
}

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(4, 6) == Rational(2, 3));
    CHECK(Rational(42, 63) == Rational(2, 3));
    CHECK((Rational(2) - Rational(10, 7)) == Rational(4, 7));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(6, 3).is_integral());
    CHECK_FALSE(Rational(10, 7).is_integral());
    CHECK(Rational(10, 7).str() == "10/7");
}
