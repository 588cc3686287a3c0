#pragma once

#include <cstdint>
#include <vector>

#include "dtuple/arith.hpp"
#include "dtuple/real.hpp"

namespace dtuple {

/// Residues x mod p that keep every a_i*x + n a square candidate, i.e.
/// Legendre(a_i*x + n | p) is 0 or +1 for all prefix elements a_i. p must be
/// an odd prime not dividing any prefix element (p | n is fine). The returned
/// count is the sieve quantity g(p).
std::vector<long> admissible_residues(const std::vector<Int>& prefix, const Int& n, long p);

/// Per-prime allowed residue classes used to prefilter x before exact checks.
struct SieveSpec {
    struct Entry {
        std::uint32_t q = 0;                // modulus (primes at first power)
        std::uint32_t p = 0;                // underlying prime; weight is log p
        std::vector<std::uint8_t> allowed;  // allowed[x % q] != 0 keeps x
        std::uint32_t g = 0;                // number of allowed classes
    };
    std::vector<Entry> entries;
};

/// Odd primes up to prime_limit that are coprime to the prefix, each with its
/// admissible residue classes.
SieveSpec make_sieve_spec(const std::vector<Int>& prefix, const Int& n,
                          std::uint32_t prime_limit = 256);

/// All x in [1, N] with a_i*x + n a perfect square for every prefix element,
/// ascending. Candidates are sieved segment by segment against the residue
/// spec (auto-built when absent) and survivors are confirmed exactly, so the
/// sieve only accelerates and never decides.
std::vector<Int> solve_system(const std::vector<Int>& prefix, const Int& n, const Int& N,
                              const SieveSpec* spec = nullptr);

struct GallagherEntry {
    Int q;        // prime power
    Real weight;  // Lambda(q) = log p
    Int g;        // residue classes not removed, >= 1
};

/// Large-sieve bound (sum w - log N) / (sum w/g - log N) on the number of
/// integers surviving the residue removal in any interval of length N. The
/// formula's own proviso (positive denominator) is enforced as an
/// inapplicable_error.
Real gallagher_bound(const std::vector<GallagherEntry>& entries, const Int& N);

}  // namespace dtuple
