#pragma once

#include <optional>

#include "dtuple/arith.hpp"
#include "dtuple/real.hpp"

namespace dtuple {

/// Closed-form size bounds for D(n) sets, split by element range: "large"
/// elements are >= |n|^3, "small" lie in (n^2, |n|^3), "very small" in
/// [1, n^2]. Values are reported exactly as the formulas state them, never
/// pre-floored; logs are natural.
struct BoundReport {
    Int n;
    Real large_max;                      // constant 21
    Real small_max;                      // 0.65 ln|n| + 2.24
    std::optional<Real> very_small_max;  // 265.55 ln|n| (ln ln|n|)^2 + 9.01 ln ln|n|, |n| >= 400
    Real overall_max;                    // 32 for |n| <= 400, else 267.81 ln|n| (ln ln|n|)^2
    std::optional<Real> gyarmati;        // 4 n ln n, n >= 2 only
};

BoundReport theorem_bounds(const Int& n);

/// Inputs and derived quantities of the simultaneous-approximation lower
/// bound of Bennett: for c0 < c1 < c2 with some c_j = 0 and L > M^9,
/// approximations of sqrt(1 + c_i/L) by p_i/q are off by more than
/// (130 L gamma)^-1 q^-lambda.
struct BennettQuantities {
    Int c0, c1, c2;
    Int L;
    Int M;       // max |c_i|
    bool valid;  // L > M^9; reported, not enforced
    Rat gamma;
    Real lambda;  // 1 + log(33 L gamma) / log(1.7 L^2 prod (c_i - c_j)^-2)
};

BennettQuantities bennett_gamma_lambda(const Int& c0, const Int& c1, const Int& c2,
                                       const Int& L);

}  // namespace dtuple
