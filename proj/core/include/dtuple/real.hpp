#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dtuple/arith.hpp"

namespace dtuple {

// 50 significant decimal digits; used wherever a formula mixes exact integers
// with logarithms or irrational square roots.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Int& v) { return Real(v.get_str()); }

inline Real to_real(const Rat& v) {
    return Real(v.get_num().get_str()) / Real(v.get_den().get_str());
}

}  // namespace dtuple
