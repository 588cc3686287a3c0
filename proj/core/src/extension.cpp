#include "dtuple/extension.hpp"

#include <algorithm>

#include "dtuple/tuples.hpp"

namespace dtuple {

namespace {

struct TripleRoots {
    Int r, s, t;
};

TripleRoots triple_roots(const Int& a, const Int& b, const Int& c, const Int& n) {
    if (!(a < b && b < c)) throw input_error("triple must satisfy a < b < c");
    if (a < 1) throw input_error("triple elements must be positive");
    if (n == 0) throw input_error("n must be nonzero");
    auto r = square_witness(a * b + n);
    auto s = square_witness(a * c + n);
    auto t = square_witness(b * c + n);
    if (!r || !s || !t) throw input_error("triple is not D(n): a pair product plus n is not a square");
    return {*r, *s, *t};
}

}  // namespace

ExtensionData triple_extension(const Int& a, const Int& b, const Int& c, const Int& n) {
    auto [r, s, t] = triple_roots(a, b, c, n);
    ExtensionData ext;
    ext.r = r;
    ext.s = s;
    ext.t = t;
    ext.e = n * (a + b + c) + 2 * a * b * c - 2 * r * s * t;
    ext.x = a * t - r * s;
    ext.y = b * s - r * t;
    ext.z = c * r - s * t;
    return ext;
}

std::vector<Int> regular_fourth(const Int& a, const Int& b, const Int& c, const Int& n) {
    auto [r, s, t] = triple_roots(a, b, c, n);
    const Int abc = a * b * c;
    const Int rst = r * s * t;
    std::vector<Int> out;
    for (int sign : {+1, -1}) {
        const Int num = 2 * (abc + sign * rst);
        if (!mpz_divisible_p(num.get_mpz_t(), n.get_mpz_t())) continue;
        const Int d = a + b + c + num / n;
        if (d <= c) continue;
        if (verify(n, {a, b, c, d}).valid) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GapReport gap_check(const Int& a, const Int& b, const Int& c, const Int& d, const Int& n) {
    if (!(a < b && b < c && c < d)) throw input_error("gap_check: requires a < b < c < d");
    if (!verify(n, {a, b, c, d}).valid) throw input_error("gap_check: quadruple is not D(n)");

    const Int abs_n = abs(n);
    const Int nn = n * n;
    GapReport rep;
    rep.large_gap_applicable = abs_n * abs_n * abs_n <= a;
    rep.small_gap_applicable = nn <= a && abs_n != 1;

    // d > 3847/1000 * bc/n^2  <=>  1000 n^2 d > 3847 bc
    rep.d_above_large_gap = 1000 * nn * d > 3847 * b * c;
    rep.c_above_small_gap = 100 * c > 388 * a;
    rep.d_above_small_gap = 100 * d > 489 * c;

    rep.large_gap_rhs = Rat(Int(3847 * b * c), Int(1000 * nn));
    rep.small_gap_rhs_c = Rat(Int(388 * a), Int(100));
    rep.small_gap_rhs_d = Rat(Int(489 * c), Int(100));
    rep.large_gap_rhs.canonicalize();
    rep.small_gap_rhs_c.canonicalize();
    rep.small_gap_rhs_d.canonicalize();
    return rep;
}

std::vector<Rat> gap_lower_bounds(const Int& seed_a, const Int& seed_b, const Int& n,
                                  std::size_t count) {
    if (seed_a < 1 || seed_b < 1) throw input_error("gap_lower_bounds: seeds must be >= 1");
    if (count < 1) throw input_error("gap_lower_bounds: count must be >= 1");
    if (n == 0) throw input_error("gap_lower_bounds: n must be nonzero");

    const Rat factor(3847, 1000);
    Rat inv_nn(Int(1), Int(n * n));
    inv_nn.canonicalize();

    std::vector<Rat> out;
    out.reserve(count);
    Rat prev(seed_a), cur(seed_b);
    for (std::size_t i = 0; i < count; ++i) {
        Rat next = factor * cur * prev * inv_nn;
        next.canonicalize();
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

DefectReport approximation_defects(const Int& a, const Int& b, const Int& c, const Int& d,
                                   const Int& n) {
    if (!(a < b && b < c && c < d)) throw input_error("approximation_defects: requires a < b < c < d");
    if (!(a * c > n)) throw input_error("approximation_defects: requires ac > n");
    if (!verify(n, {a, b, c, d}).valid)
        throw input_error("approximation_defects: quadruple is not D(n)");

    const Int s = *square_witness(a * c + n);
    const Int t = *square_witness(b * c + n);
    const Int x = *square_witness(a * d + n);
    const Int y = *square_witness(b * d + n);
    const Int z = *square_witness(c * d + n);

    auto ratio = [](const Int& num, const Int& den) {
        Rat q(num, den);
        q.canonicalize();
        return to_real(q);
    };

    const Real theta1 = sqrt(ratio(a * c + n, a * c));
    const Real theta2 = sqrt(ratio(b * c + n, b * c));
    const Real approx1 = ratio(s * b * x, a * b * z);
    const Real approx2 = ratio(t * a * y, a * b * z);

    DefectReport rep;
    rep.defect1 = abs(theta1 - approx1);
    rep.defect2 = abs(theta2 - approx2);
    rep.bound = ratio(c * abs(n), a * z * z);
    return rep;
}

}  // namespace dtuple
