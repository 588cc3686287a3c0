#include "dtuple/arith.hpp"

#include <algorithm>

namespace dtuple {

Int isqrt(const Int& m) {
    if (sgn(m) < 0) throw input_error("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::optional<Int> square_witness(const Int& v) {
    if (sgn(v) < 0) return std::nullopt;
    Int r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

bool is_square(const Int& v) {
    return sgn(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

int legendre(const Int& a, const Int& p) {
    if (p <= 2 || !is_probable_prime(p)) throw input_error("legendre: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

Int pow_int(const Int& base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int mod_nonneg(const Int& v, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Int invmod(const Int& v, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0)
        throw input_error("invmod: not invertible");
    return r;
}

// Tonelli-Shanks: one root of r^2 = v (mod p) for odd prime p and v a
// nonzero quadratic residue.
Int tonelli_shanks(const Int& v, const Int& p) {
    if (mod_nonneg(p, 4) == 3) return powmod(v, (p + 1) / 4, p);

    Int q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;

    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    Int m = s;
    Int c = powmod(z, q, p);
    Int t = powmod(v, q, p);
    Int r = powmod(v, (q + 1) / 2, p);
    while (t != 1) {
        Int i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Roots of w^2 = u (mod p^beta) for odd prime p and p coprime to u:
// Tonelli-Shanks at beta = 1, then Hensel lifting (each root lifts uniquely).
std::vector<Int> unit_roots_odd(const Int& u, const Int& p, unsigned beta) {
    if (mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) != 1) return {};
    Int r = tonelli_shanks(mod_nonneg(u, p), p);
    Int pk = p;
    for (unsigned k = 1; k < beta; ++k) {
        // r' = r + p^k * ((u - r^2)/p^k * (2r)^-1 mod p)
        Int t = (u - r * r) / pk;
        Int step = mod_nonneg(t * invmod(2 * r, p), p);
        r += pk * step;
        pk *= p;
    }
    Int other = pk - r;
    if (r > other) std::swap(r, other);
    return {r, other};
}

// Roots of w^2 = u (mod 2^beta) for odd u, by doubling lifts.
std::vector<Int> unit_roots_two(const Int& u, unsigned beta) {
    if (beta == 1) return {Int(1)};
    if (beta == 2) return mod_nonneg(u, 4) == 1 ? std::vector<Int>{1, 3} : std::vector<Int>{};
    if (mod_nonneg(u, 8) != 1) return {};
    std::vector<Int> roots{1, 3, 5, 7};  // mod 8
    Int mod = 8;
    for (unsigned k = 3; k < beta; ++k) {
        Int next_mod = mod * 2;
        std::vector<Int> lifted;
        for (const Int& r : roots) {
            for (const Int& cand : {Int(r), Int(r + mod)}) {
                if (mod_nonneg(cand * cand - u, next_mod) == 0) lifted.push_back(cand);
            }
        }
        std::sort(lifted.begin(), lifted.end());
        lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
        roots = std::move(lifted);
        mod = next_mod;
    }
    return roots;
}

}  // namespace

std::vector<Int> sqrtmod_prime_power(Int v, const Int& p, unsigned alpha) {
    if (alpha == 0 || p < 2 || !is_probable_prime(p))
        throw input_error("sqrtmod: modulus is not a prime power");
    const Int q = pow_int(p, alpha);
    v = mod_nonneg(v, q);

    std::vector<Int> out;
    if (v == 0) {
        // r = 0 (mod p^ceil(alpha/2))
        const Int step = pow_int(p, (alpha + 1) / 2);
        for (Int r = 0; r < q; r += step) out.push_back(r);
        return out;
    }

    // v = p^s * u with p coprime to u; roots need s even and exist exactly
    // when u is a square mod p^(alpha - s).
    unsigned s = 0;
    Int u = v;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
        u /= p;
        ++s;
    }
    if (s % 2 != 0) return {};
    const unsigned beta = alpha - s;
    std::vector<Int> base =
        p == 2 ? unit_roots_two(mod_nonneg(u, pow_int(p, beta)), beta)
               : unit_roots_odd(mod_nonneg(u, pow_int(p, beta)), p, beta);
    if (base.empty()) return {};

    // r = p^(s/2) * (w + t * p^beta), t in [0, p^(s/2))
    const Int scale = pow_int(p, s / 2);
    const Int stride = pow_int(p, beta);
    for (const Int& w : base) {
        for (Int t = 0; t < scale; ++t) out.push_back(scale * (w + t * stride));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> sqrtmod(const Int& v, const Int& q) {
    if (q < 2) throw input_error("sqrtmod: modulus is not a prime power");
    if (is_probable_prime(q)) return sqrtmod_prime_power(v, q, 1);

    // Composite q: a prime power has a power-free root at the largest exact
    // exponent, found by scanning k downward.
    const unsigned maxk = static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2));
    for (unsigned k = maxk; k >= 2; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0) {
            if (!is_probable_prime(root)) break;
            return sqrtmod_prime_power(v, root, k);
        }
    }
    throw input_error("sqrtmod: modulus is not a prime power");
}

}  // namespace dtuple
