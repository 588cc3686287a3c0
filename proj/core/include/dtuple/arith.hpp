#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "dtuple/errors.hpp"

namespace dtuple {

// Unbounded exact integer / rational. Everything downstream is exact unless a
// function explicitly returns a Real.
using Int = mpz_class;
using Rat = mpq_class;

/// Floor of the square root. m < 0 is an input error.
Int isqrt(const Int& m);

/// Nonnegative root r with r*r == v, or empty when v is not a perfect square
/// (every v < 0 is empty).
std::optional<Int> square_witness(const Int& v);

bool is_square(const Int& v);

/// Legendre symbol (a|p), p an odd prime.
int legendre(const Int& a, const Int& p);

bool is_probable_prime(const Int& n);

/// All residues 0 <= r < p^alpha with r^2 = v (mod p^alpha), ascending.
/// Tonelli-Shanks at the prime level, Hensel lifting above it, with the usual
/// 2-adic case split for p = 2. v may share factors with p.
std::vector<Int> sqrtmod_prime_power(Int v, const Int& p, unsigned alpha);

/// Same, with the modulus given as a bare prime power q; any other q is an
/// input error.
std::vector<Int> sqrtmod(const Int& v, const Int& q);

}  // namespace dtuple
