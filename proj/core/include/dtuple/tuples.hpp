#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtuple/arith.hpp"

namespace dtuple {

/// A candidate or verified m-tuple: the parameter n plus strictly increasing
/// positive elements. The defining property is that a*b + n is a perfect
/// square for every pair of distinct elements a, b.
struct DTuple {
    Int n;
    std::vector<Int> elements;

    bool operator==(const DTuple&) const = default;
};

/// Root certifying elements[i]*elements[j] + n = root^2.
struct SquareWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    Int root;
};

struct VerifyReport {
    bool valid = false;
    DTuple tuple;                          // input with elements sorted
    std::vector<SquareWitness> witnesses;  // passing pairs, (i, j) lexicographic
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

/// Check the square condition on every 2-subset. All pairs are examined in
/// lexicographic index order; first_failure names the first one that misses.
/// n = 0, a nonpositive element or a duplicate is an input error.
VerifyReport verify(const Int& n, std::vector<Int> elements);

/// Root r >= 0 with a*b + n = r^2, or empty when the pair is incompatible.
std::optional<Int> compatible(const Int& a, const Int& b, const Int& n);

struct PairExtension {
    Int d;       // a + c + 2s
    Int root_a;  // a + s, certifying a*d + n = root_a^2
    Int root_c;  // c + s, certifying c*d + n = root_c^2
};

/// Third element d = a + c + 2s built from a compatible pair (ac + n = s^2,
/// a < c). The result carries both witnesses; the caller owns the d > c check
/// when it assembles increasing tuples.
PairExtension pair_regular_extension(const Int& a, const Int& c, const Int& n);

/// Canonical JSON form {"n": int, "elements": [int, ...]}.
std::string to_json_string(const DTuple& t);

/// Parse the canonical form. Values must fit a 64-bit signed integer.
DTuple dtuple_from_json(const std::string& text);

}  // namespace dtuple
