#include <doctest.h>

#include <algorithm>

#include "dtuple/extension.hpp"
#include "dtuple/families.hpp"
#include "dtuple/sieve.hpp"

using dtuple::Int;

TEST_SUITE("families") {

TEST_CASE("d1_quadruple on known parameters") {
    CHECK(dtuple::d1_quadruple(1).elements == std::vector<Int>{1, 3, 8, 120});
    CHECK(dtuple::d1_quadruple(2).elements == std::vector<Int>{2, 4, 12, 420});
    CHECK(dtuple::d1_quadruple(10).elements == std::vector<Int>{10, 12, 44, 21252});
    CHECK(dtuple::d1_quadruple(1).n == 1);
    CHECK_THROWS_AS(dtuple::d1_quadruple(0), dtuple::input_error);
}

TEST_CASE("d1_quadruple verifies across the parameter range") {
    for (long k = 1; k <= 1000; ++k) {
        auto t = dtuple::d1_quadruple(k);  // throws logic_error on any failure
        CHECK(t.elements.size() == 4);
    }
}

TEST_CASE("dsq_triple on known parameters") {
    auto t5 = dtuple::dsq_triple(5);
    CHECK(t5.n == 25);
    CHECK(t5.elements == std::vector<Int>{26, 36, 124});
    auto t6 = dtuple::dsq_triple(6);
    CHECK(t6.n == 36);
    CHECK(t6.elements == std::vector<Int>{37, 49, 172});
    CHECK_THROWS_AS(dtuple::dsq_triple(4), dtuple::input_error);
}

TEST_CASE("dsq_triple verifies across the parameter range") {
    for (long a = 5; a <= 1000; ++a) {
        auto t = dtuple::dsq_triple(a);
        CHECK(t.elements.size() == 3);
    }
}

TEST_CASE("catalog carries the expected fixtures, all verified at load") {
    const auto& fixtures = dtuple::catalog();
    REQUIRE(fixtures.size() == 5);

    auto find = [&](const std::string& name) {
        auto it = std::find_if(fixtures.begin(), fixtures.end(),
                               [&](const dtuple::Fixture& f) { return f.name == name; });
        REQUIRE(it != fixtures.end());
        return *it;
    };

    CHECK(find("fermat").tuple.elements == std::vector<Int>{1, 3, 8, 120});
    CHECK(find("fermat").tuple.n == 1);
    CHECK(find("diophantus").tuple.n == 256);
    CHECK(find("gibbs-sextuple").tuple.n == 2985984);
    CHECK(find("gibbs-sextuple").tuple.elements.size() == 6);
    CHECK(find("d2-triple").tuple.elements == std::vector<Int>{1, 2, 7});

    for (const auto& f : fixtures) {
        CHECK(dtuple::verify(f.tuple.n, f.tuple.elements).valid);
    }
}

TEST_CASE("quintuple fixture equals the regular extension chain") {
    const auto& fixtures = dtuple::catalog();
    auto quint = std::find_if(fixtures.begin(), fixtures.end(), [](const dtuple::Fixture& f) {
        return f.name == "d256-quintuple";
    });
    REQUIRE(quint != fixtures.end());
    CHECK(dtuple::regular_fourth(1, 33, 105, 256) == std::vector<Int>{320});
    CHECK(dtuple::regular_fourth(33, 105, 320, 256) == std::vector<Int>{18240});
    CHECK(quint->tuple.elements == std::vector<Int>{1, 33, 105, 320, 18240});
}

TEST_CASE("known non-extendable sets stay non-extendable up to 10^6") {
    // {1,2,c} under D(-1): the pair {1,2} has infinitely many third elements
    // but none of the resulting triples accepts a fourth.
    for (long c : {5L, 145L}) {
        auto sols = dtuple::solve_system({Int(1), Int(2), Int(c)}, -1, 1000000);
        for (const Int& x : sols) {
            CHECK((x == 1 || x == 2 || x == c));
        }
    }
    // {1,2,3} and {1,2,4} under D(1)
    for (long c : {3L, 4L}) {
        auto sols = dtuple::solve_system({Int(1), Int(2), Int(c)}, 1, 1000000);
        for (const Int& x : sols) {
            CHECK((x == 1 || x == 2 || x == c));
        }
    }
}

}  // TEST_SUITE
