#pragma once

#include <string>
#include <vector>

#include "dtuple/tuples.hpp"

namespace dtuple {

struct Fixture {
    std::string name;
    DTuple tuple;
    std::string source;
};

/// {k, k+2, 4k+4, 16k^3+48k^2+44k+12} with n = 1, k >= 1. Verified before it
/// is returned; a failure would be a logic error, not an input error.
DTuple d1_quadruple(const Int& k);

/// {a^2+1, a^2+2a+1, 4a^2+4a+4} with n = a^2, a >= 5. Verified likewise.
DTuple dsq_triple(const Int& a);

/// Curated verified tuples used as fixtures across the test suites: the
/// Diophantus quadruple, the Fermat quadruple, the quintuple extending
/// {1,33,105}, the Gibbs sextuple, and the smallest D(2) triple.
const std::vector<Fixture>& catalog();

}  // namespace dtuple
