#pragma once

#include <cstddef>
#include <vector>

#include "dtuple/arith.hpp"
#include "dtuple/real.hpp"

namespace dtuple {

/// Extension quantities of a D(n) triple {a,b,c} with pair roots
/// ab+n = r^2, ac+n = s^2, bc+n = t^2:
///
///   e = n(a+b+c) + 2abc - 2rst,   x = at-rs,  y = bs-rt,  z = cr-st,
///
/// satisfying ae+n^2 = x^2, be+n^2 = y^2, ce+n^2 = z^2 and the division-free
/// reconstruction identity n^2 (c-a-b) - n e = 2 (abe + rxy).
struct ExtensionData {
    Int e;
    Int x, y, z;  // signed; only their squares and the product rxy matter
    Int r, s, t;  // nonnegative pair roots
};

ExtensionData triple_extension(const Int& a, const Int& b, const Int& c, const Int& n);

/// Fourth elements d = a+b+c + 2(abc +- rst)/n for which n divides exactly,
/// d > c, and {a,b,c,d} verifies. At most two candidates, ascending.
std::vector<Int> regular_fourth(const Int& a, const Int& b, const Int& c, const Int& n);

/// Exact truth of the two gap principles on a verified quadruple a<b<c<d:
/// d > 3.847 bc/n^2 (claimed when |n|^3 <= a) and the pair c > 3.88 a,
/// d > 4.89 c (claimed when n^2 <= a and |n| != 1). All comparisons are
/// cross-multiplied integers; the decimal factors are exact rationals.
struct GapReport {
    bool large_gap_applicable = false;  // |n|^3 <= a
    bool small_gap_applicable = false;  // n^2 <= a and |n| != 1
    bool d_above_large_gap = false;     // d > 3847/1000 * bc / n^2
    bool c_above_small_gap = false;     // c > 388/100 * a
    bool d_above_small_gap = false;     // d > 489/100 * c
    Rat large_gap_rhs;
    Rat small_gap_rhs_c;
    Rat small_gap_rhs_d;
};

GapReport gap_check(const Int& a, const Int& b, const Int& c, const Int& d, const Int& n);

/// Iterate the gap recurrence L_{j+1} = 3847/1000 * L_j * L_{j-1} / n^2
/// exactly in rationals from two seed lower bounds, returning count values.
std::vector<Rat> gap_lower_bounds(const Int& seed_a, const Int& seed_b, const Int& n,
                                  std::size_t count);

/// Simultaneous-approximation defects of a verified quadruple a<b<c<d with
/// ac > n. With s,t the roots of ac+n, bc+n and x,y,z the nonnegative roots
/// of ad+n, bd+n, cd+n:
///
///   defect1 = |sqrt(1 + n/(ac)) - sbx/(abz)|
///   defect2 = |sqrt(1 + n/(bc)) - tay/(abz)|
///   bound   = c|n| / (a z^2)
///
/// and max(defect1, defect2) < bound holds for solutions of the associated
/// Pellian system.
struct DefectReport {
    Real defect1;
    Real defect2;
    Real bound;
};

DefectReport approximation_defects(const Int& a, const Int& b, const Int& c, const Int& d,
                                   const Int& n);

}  // namespace dtuple
