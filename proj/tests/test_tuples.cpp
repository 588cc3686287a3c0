#include <doctest.h>

#include <algorithm>
#include <random>

#include "dtuple/tuples.hpp"

using dtuple::Int;

TEST_SUITE("tuples") {

TEST_CASE("verify accepts the classical D(1) quadruple with all pair roots") {
    auto rep = dtuple::verify(1, {1, 3, 8, 120});
    REQUIRE(rep.valid);
    REQUIRE(rep.witnesses.size() == 6);
    const std::vector<long> roots{2, 3, 11, 5, 19, 31};  // pairs in lexicographic order
    for (std::size_t k = 0; k < roots.size(); ++k) {
        CHECK(rep.witnesses[k].root == roots[k]);
    }
    CHECK(!rep.first_failure.has_value());
}

TEST_CASE("verify accepts the D(2985984) sextuple") {
    auto rep = dtuple::verify(2985984, {99, 315, 9920, 32768, 44460, 19534284});
    CHECK(rep.valid);
    CHECK(rep.witnesses.size() == 15);
}

TEST_CASE("verify reports the first failing pair") {
    auto rep = dtuple::verify(1, {1, 2, 3});
    CHECK(!rep.valid);
    REQUIRE(rep.first_failure.has_value());
    CHECK(rep.first_failure->first == 0);   // elements 1 and 2: 1*2+1 = 3
    CHECK(rep.first_failure->second == 1);
    // passing pairs still get witnesses: (1,3) -> 2 and (2,3) -> ... 2*3+1=7 no
    CHECK(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].root == 2);
}

TEST_CASE("verify rejects malformed input") {
    CHECK_THROWS_AS(dtuple::verify(0, {1, 2}), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::verify(1, {0, 2}), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::verify(1, {-3, 2}), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::verify(1, {2, 2}), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::verify(1, std::vector<Int>{}), dtuple::input_error);
}

TEST_CASE("verify is permutation invariant") {
    std::mt19937_64 rng(5);
    std::vector<Int> elems{1, 33, 105, 320, 18240};
    auto reference = dtuple::verify(256, elems);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(elems.begin(), elems.end(), rng);
        auto rep = dtuple::verify(256, elems);
        CHECK(rep.valid == reference.valid);
        CHECK(rep.tuple.elements == reference.tuple.elements);
        REQUIRE(rep.witnesses.size() == reference.witnesses.size());
        for (std::size_t k = 0; k < rep.witnesses.size(); ++k)
            CHECK(rep.witnesses[k].root == reference.witnesses[k].root);
    }
}

TEST_CASE("compatible on known pairs") {
    CHECK(dtuple::compatible(1, 120, 1).value() == 11);
    CHECK(dtuple::compatible(68, 105, 256).value() == 86);
    CHECK(!dtuple::compatible(1, 2, 1).has_value());
    CHECK_THROWS_AS(dtuple::compatible(2, 2, 1), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::compatible(0, 2, 1), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::compatible(1, 2, 0), dtuple::input_error);
}

TEST_CASE("pair_regular_extension on known pairs") {
    auto e1 = dtuple::pair_regular_extension(1, 3, 1);
    CHECK(e1.d == 8);
    CHECK(e1.root_a == 3);
    CHECK(e1.root_c == 5);

    auto e2 = dtuple::pair_regular_extension(1, 8, 1);
    CHECK(e2.d == 15);
    CHECK(e2.root_a * e2.root_a == 16);
    CHECK(e2.root_c * e2.root_c == 121);

    CHECK(dtuple::pair_regular_extension(3, 8, 1).d == 21);
    CHECK_THROWS_AS(dtuple::pair_regular_extension(1, 2, 1), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::pair_regular_extension(3, 1, 1), dtuple::input_error);
}

TEST_CASE("pair_regular_extension output always verifies as a triple") {
    std::mt19937_64 rng(42);
    int built = 0;
    while (built < 1000) {
        const long n = static_cast<long>(rng() % 101) - 50;
        if (n == 0) continue;
        const long a = static_cast<long>(rng() % 300) + 1;
        const long c = a + 1 + static_cast<long>(rng() % 300);
        if (!dtuple::compatible(a, c, n)) continue;
        auto ext = dtuple::pair_regular_extension(a, c, n);
        CHECK(ext.d > c);
        CHECK(dtuple::verify(n, {a, c, ext.d}).valid);
        CHECK(ext.root_a * ext.root_a == a * ext.d + n);
        CHECK(ext.root_c * ext.root_c == c * ext.d + n);
        ++built;
    }
}

TEST_CASE("canonical JSON round trip") {
    dtuple::DTuple t{Int(-299), {14, 22, 30, 42, 90}};
    CHECK(dtuple::to_json_string(t) == "{\"n\":-299,\"elements\":[14,22,30,42,90]}");
    CHECK(dtuple::dtuple_from_json(dtuple::to_json_string(t)) == t);
    CHECK_THROWS_AS(dtuple::dtuple_from_json("{\"n\":1}"), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::dtuple_from_json("not json"), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::dtuple_from_json("{\"n\":1.5,\"elements\":[]}"),
                    dtuple::input_error);
}

}  // TEST_SUITE
