#include <doctest.h>

#include <random>

#include "dtuple/extension.hpp"
#include "dtuple/tuples.hpp"

using dtuple::Int;
using dtuple::Rat;

namespace {

// The four exact identities every ExtensionData must satisfy for its triple.
void check_identities(const dtuple::ExtensionData& ext, const Int& a, const Int& b,
                      const Int& c, const Int& n) {
    CHECK(a * ext.e + n * n == ext.x * ext.x);
    CHECK(b * ext.e + n * n == ext.y * ext.y);
    CHECK(c * ext.e + n * n == ext.z * ext.z);
    CHECK(n * n * (c - a - b) - n * ext.e == 2 * (a * b * ext.e + ext.r * ext.x * ext.y));
}

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("triple_extension on known triples") {
    auto e1 = dtuple::triple_extension(1, 3, 8, 1);
    CHECK(e1.e == 0);
    CHECK(e1.x == -1);
    CHECK(e1.y == -1);
    CHECK(e1.z == 1);  // 8*2 - 3*5; the identity 8e+1 = z^2 pins |z| = 1
    CHECK(e1.r == 2);
    CHECK(e1.s == 3);
    CHECK(e1.t == 5);
    check_identities(e1, 1, 3, 8, 1);

    auto e2 = dtuple::triple_extension(1, 33, 68, 256);
    CHECK(e2.e == 0);
    CHECK(e2.x == -256);
    CHECK(e2.y == -256);
    CHECK(e2.z == 256);
    check_identities(e2, 1, 33, 68, 256);

    auto e3 = dtuple::triple_extension(1, 3, 120, 1);
    CHECK(e3.e == 8);
    CHECK(e3.x == -3);
    CHECK(e3.y == -5);
    CHECK(e3.z == 31);
    check_identities(e3, 1, 3, 120, 1);
}

TEST_CASE("triple_extension rejects non-D(n) triples") {
    CHECK_THROWS_AS(dtuple::triple_extension(1, 2, 3, 1), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::triple_extension(3, 1, 8, 1), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::triple_extension(1, 3, 8, 0), dtuple::input_error);
}

TEST_CASE("regular_fourth reproduces the classical chains") {
    CHECK(dtuple::regular_fourth(1, 3, 8, 1) == std::vector<Int>{120});
    CHECK(dtuple::regular_fourth(1, 33, 105, 256) == std::vector<Int>{320});
    CHECK(dtuple::regular_fourth(33, 105, 320, 256) == std::vector<Int>{18240});
}

TEST_CASE("regular_fourth filters candidates that fail verification") {
    // {1,2,7} under D(2): d+ = 48 fails (1*48+2 = 50), d- = 0 is below c.
    CHECK(dtuple::regular_fourth(1, 2, 7, 2).empty());
    CHECK_THROWS_AS(dtuple::regular_fourth(1, 2, 4, 1), dtuple::input_error);
}

TEST_CASE("gap_check on known quadruples") {
    auto g1 = dtuple::gap_check(1, 3, 8, 120, 1);
    CHECK(g1.large_gap_applicable);  // |1|^3 <= 1
    CHECK(g1.d_above_large_gap);     // 120 > 3.847*24 = 92.328
    CHECK(!g1.small_gap_applicable);
    Rat rhs(3847 * 24, 1000);
    rhs.canonicalize();
    CHECK(g1.large_gap_rhs == rhs);

    auto g2 = dtuple::gap_check(1, 33, 68, 105, 256);
    CHECK(!g2.large_gap_applicable);
    CHECK(!g2.small_gap_applicable);

    auto g3 = dtuple::gap_check(2, 4, 12, 420, 1);
    CHECK(g3.large_gap_applicable);
    CHECK(g3.d_above_large_gap);  // 420 > 3.847*48

    CHECK_THROWS_AS(dtuple::gap_check(1, 2, 3, 4, 1), dtuple::input_error);
}

TEST_CASE("gap_lower_bounds single step") {
    auto bounds = dtuple::gap_lower_bounds(8, 9, 2, 1);  // n^2 = 4
    REQUIRE(bounds.size() == 1);
    Rat expected(3847 * 72, 4000);  // = 69246/1000
    expected.canonicalize();
    CHECK(bounds[0] == expected);
}

TEST_CASE("gap_lower_bounds with unit seeds exercises the bare recurrence") {
    auto bounds = dtuple::gap_lower_bounds(1, 1, 1, 3);
    REQUIRE(bounds.size() == 3);
    CHECK(bounds[0] == Rat(3847, 1000));
    CHECK(bounds[1] == Rat(Int(3847) * 3847, Int(1000) * 1000));
    // L3 = 3.847 * L2 * L1
    CHECK(bounds[2] == Rat(3847, 1000) * bounds[1] * bounds[0]);
}

TEST_CASE("gap_lower_bounds ninth value passes the chain threshold") {
    // Seeds a2 = |n|^3 model the start of the large-element chain; nine steps
    // out the bound exceeds a2^11 |n|^11.
    for (long n = 1; n <= 10; ++n) {
        const Int a2 = Int(n) * n * n;
        auto bounds = dtuple::gap_lower_bounds(a2, a2, n, 9);
        Int threshold;
        mpz_pow_ui(threshold.get_mpz_t(), a2.get_mpz_t(), 11);
        Int n11;
        mpz_pow_ui(n11.get_mpz_t(), Int(n).get_mpz_t(), 11);
        threshold *= n11;
        CHECK(bounds[8] > Rat(threshold));
    }
}

TEST_CASE("gap_lower_bounds argument checks") {
    CHECK_THROWS_AS(dtuple::gap_lower_bounds(0, 1, 1, 1), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::gap_lower_bounds(1, 1, 0, 1), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::gap_lower_bounds(1, 1, 1, 0), dtuple::input_error);
}

TEST_CASE("approximation_defects on the classical quadruple") {
    auto rep = dtuple::approximation_defects(1, 3, 8, 120, 1);
    // Reference values computed independently with 40-digit arithmetic.
    CHECK(abs(rep.defect1 - dtuple::Real("0.0038559572524367779148624891007909572")) < 1e-30);
    CHECK(abs(rep.defect2 - dtuple::Real("0.00088465018442848058984131295856675872")) < 1e-30);
    CHECK(rep.bound == dtuple::to_real(Rat(8, 961)));
    CHECK(rep.defect1 < rep.bound);
    CHECK(rep.defect2 < rep.bound);
}

TEST_CASE("approximation_defects on the D(256) quintuple prefix") {
    auto rep = dtuple::approximation_defects(1, 33, 105, 320, 256);
    CHECK(rep.defect1 < rep.bound);
    CHECK(rep.defect2 < rep.bound);
}

TEST_CASE("approximation_defects enforces its preconditions") {
    // {1,33,68,105} under D(256) verifies but ac = 68 <= 256
    CHECK_THROWS_AS(dtuple::approximation_defects(1, 33, 68, 105, 256), dtuple::input_error);
    CHECK_THROWS_AS(dtuple::approximation_defects(1, 3, 8, 119, 1), dtuple::input_error);
}

TEST_CASE("extension identities hold on random pair-extended triples") {
    std::mt19937_64 rng(314159);
    int built = 0;
    while (built < 1000) {
        const long n = static_cast<long>(rng() % 101) - 50;
        if (n == 0) continue;
        const long a = static_cast<long>(rng() % 200) + 1;
        const long c = a + 1 + static_cast<long>(rng() % 200);
        if (!dtuple::compatible(a, c, n)) continue;
        const Int d = dtuple::pair_regular_extension(a, c, n).d;
        auto ext = dtuple::triple_extension(a, c, d, n);
        check_identities(ext, a, c, d, n);
        ++built;
    }
}

}  // TEST_SUITE
