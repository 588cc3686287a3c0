#include "dtuple/bounds.hpp"

#include <algorithm>

namespace dtuple {

BoundReport theorem_bounds(const Int& n) {
    if (n == 0) throw input_error("theorem_bounds: n must be nonzero");
    const Int abs_n = abs(n);
    const Real ln_n = log(to_real(abs_n));

    BoundReport rep;
    rep.n = n;
    rep.large_max = 21;
    rep.small_max = Real("0.65") * ln_n + Real("2.24");
    if (abs_n >= 400) {
        const Real lnln = log(ln_n);
        rep.very_small_max = Real("265.55") * ln_n * lnln * lnln + Real("9.01") * lnln;
    }
    if (abs_n <= 400) {
        rep.overall_max = 32;
    } else {
        const Real lnln = log(ln_n);
        rep.overall_max = Real("267.81") * ln_n * lnln * lnln;
    }
    if (n >= 2) rep.gyarmati = Real(4) * to_real(n) * ln_n;
    return rep;
}

BennettQuantities bennett_gamma_lambda(const Int& c0, const Int& c1, const Int& c2,
                                       const Int& L) {
    if (!(c0 < c1 && c1 < c2))
        throw input_error("bennett_gamma_lambda: requires c0 < c1 < c2");
    if (c0 != 0 && c1 != 0 && c2 != 0)
        throw input_error("bennett_gamma_lambda: some c_j must be 0");
    if (L < 1) throw input_error("bennett_gamma_lambda: L must be >= 1");

    BennettQuantities q;
    q.c0 = c0;
    q.c1 = c1;
    q.c2 = c2;
    q.L = L;
    q.M = std::max({abs(c0), abs(c1), abs(c2)});

    Int m9;
    mpz_pow_ui(m9.get_mpz_t(), q.M.get_mpz_t(), 9);
    q.valid = L > m9;

    if (c2 - c1 >= c1 - c0) {
        q.gamma = Rat(Int((c2 - c0) * (c2 - c0) * (c2 - c1) * (c2 - c1)),
                      Int(2 * c2 - c0 - c1));
    } else {
        q.gamma = Rat(Int((c2 - c0) * (c2 - c0) * (c1 - c0) * (c1 - c0)),
                      Int(c1 + c2 - 2 * c0));
    }
    q.gamma.canonicalize();

    // lambda = 1 + log(33 L gamma) / log(1.7 L^2 prod (c_i - c_j)^-2)
    const Int diff_prod = (c0 - c1) * (c0 - c2) * (c1 - c2);
    Rat denom_arg(Int(17 * L * L), Int(10 * diff_prod * diff_prod));
    denom_arg.canonicalize();
    const Real denom = log(to_real(denom_arg));
    if (denom <= 0)
        throw inapplicable_error("bennett_gamma_lambda: nonpositive log in lambda denominator");
    const Real numer = log(to_real(Rat(33 * q.gamma * Rat(L))));
    q.lambda = 1 + numer / denom;
    return q;
}

}  // namespace dtuple
