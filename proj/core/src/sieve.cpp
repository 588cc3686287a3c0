#include "dtuple/sieve.hpp"

#include <algorithm>
#include <cstddef>

namespace dtuple {

namespace {

void check_prefix(const std::vector<Int>& prefix) {
    if (prefix.empty()) throw input_error("prefix must be nonempty");
    for (const Int& a : prefix) {
        if (a < 1) throw input_error("prefix elements must be positive");
    }
    std::vector<Int> sorted = prefix;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("prefix elements must be distinct");
}

// Squares mod p (0 included), as a lookup table.
std::vector<std::uint8_t> square_table(long p) {
    std::vector<std::uint8_t> is_sq(static_cast<std::size_t>(p), 0);
    for (long t = 0; t <= p / 2; ++t) is_sq[static_cast<std::size_t>(t * t % p)] = 1;
    return is_sq;
}

// Kernel shared by admissible_residues and make_sieve_spec: allowed classes
// x mod p given prefix and n already reduced mod p.
std::vector<long> allowed_classes(const std::vector<long>& prefix_mod, long n_mod, long p,
                                  const std::vector<std::uint8_t>& is_sq) {
    std::vector<long> keep;
    for (long x = 0; x < p; ++x) {
        bool ok = true;
        for (long am : prefix_mod) {
            if (!is_sq[static_cast<std::size_t>((am * x + n_mod) % p)]) {
                ok = false;
                break;
            }
        }
        if (ok) keep.push_back(x);
    }
    return keep;
}

long reduce_mod(const Int& v, long p) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    return static_cast<long>(r.get_ui());
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint8_t> composite(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = 1;
    }
    return primes;
}

}  // namespace

std::vector<long> admissible_residues(const std::vector<Int>& prefix, const Int& n, long p) {
    check_prefix(prefix);
    if (n == 0) throw input_error("admissible_residues: n must be nonzero");
    if (p < 3 || p % 2 == 0 || !is_probable_prime(Int(p)))
        throw input_error("admissible_residues: p must be an odd prime");

    std::vector<long> prefix_mod;
    prefix_mod.reserve(prefix.size());
    for (const Int& a : prefix) {
        long am = reduce_mod(a, p);
        if (am == 0)
            throw input_error("admissible_residues: p divides a prefix element");
        prefix_mod.push_back(am);
    }
    return allowed_classes(prefix_mod, reduce_mod(n, p), p, square_table(p));
}

SieveSpec make_sieve_spec(const std::vector<Int>& prefix, const Int& n,
                          std::uint32_t prime_limit) {
    check_prefix(prefix);
    if (n == 0) throw input_error("make_sieve_spec: n must be nonzero");

    SieveSpec spec;
    for (std::uint32_t p : primes_up_to(prime_limit)) {
        if (p == 2) continue;
        const long lp = static_cast<long>(p);
        std::vector<long> prefix_mod;
        bool divides = false;
        for (const Int& a : prefix) {
            long am = reduce_mod(a, lp);
            if (am == 0) {
                divides = true;
                break;
            }
            prefix_mod.push_back(am);
        }
        if (divides) continue;

        auto keep = allowed_classes(prefix_mod, reduce_mod(n, lp), lp, square_table(lp));
        SieveSpec::Entry entry;
        entry.q = p;
        entry.p = p;
        entry.allowed.assign(p, 0);
        for (long x : keep) entry.allowed[static_cast<std::size_t>(x)] = 1;
        entry.g = static_cast<std::uint32_t>(keep.size());
        spec.entries.push_back(std::move(entry));
    }
    return spec;
}

std::vector<Int> solve_system(const std::vector<Int>& prefix, const Int& n, const Int& N,
                              const SieveSpec* spec) {
    check_prefix(prefix);
    if (n == 0) throw input_error("solve_system: n must be nonzero");
    if (N < 1) throw input_error("solve_system: N must be >= 1");
    if (!N.fits_slong_p() || N.get_si() > (1LL << 40))
        throw input_error("solve_system: N beyond supported range");
    const std::uint64_t limit = static_cast<std::uint64_t>(N.get_si());

    SieveSpec own;
    if (spec == nullptr) {
        own = make_sieve_spec(prefix, n);
        spec = &own;
    }

    std::vector<Int> out;
    constexpr std::uint64_t kSegment = 1u << 18;
    std::vector<std::uint8_t> live;
    for (std::uint64_t lo = 1; lo <= limit; lo += kSegment) {
        const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
        const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
        live.assign(len, 1);
        // Survivors shrink geometrically, so each pass touches mostly
        // already-dead slots that cost one byte load.
        for (const auto& entry : spec->entries) {
            const std::uint64_t q = entry.q;
            std::uint32_t rem = static_cast<std::uint32_t>(lo % q);
            for (std::size_t i = 0; i < len; ++i) {
                if (live[i] && !entry.allowed[rem]) live[i] = 0;
                if (++rem == q) rem = 0;
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (!live[i]) continue;
            const Int x(static_cast<unsigned long>(lo + i));
            bool all_square = true;
            for (const Int& a : prefix) {
                if (!is_square(a * x + n)) {
                    all_square = false;
                    break;
                }
            }
            if (all_square) out.push_back(x);
        }
    }
    return out;
}

Real gallagher_bound(const std::vector<GallagherEntry>& entries, const Int& N) {
    if (entries.empty()) throw input_error("gallagher_bound: no entries");
    if (N < 1) throw input_error("gallagher_bound: N must be >= 1");
    Real weight_sum = 0;
    Real ratio_sum = 0;
    for (const auto& e : entries) {
        if (e.g < 1) throw input_error("gallagher_bound: every g(q) must be >= 1");
        weight_sum += e.weight;
        ratio_sum += e.weight / to_real(e.g);
    }
    const Real log_n = log(to_real(N));
    const Real denominator = ratio_sum - log_n;
    if (denominator <= 0)
        throw inapplicable_error("gallagher_bound: nonpositive denominator");
    return (weight_sum - log_n) / denominator;
}

}  // namespace dtuple
