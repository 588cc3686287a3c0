#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dtuple/tuples.hpp"

namespace dtuple {

struct CompatPair {
    long long a = 0;
    long long b = 0;
    long long root = 0;  // a*b + n = root^2
};

/// Every pair 1 <= a < b <= limit with a*b + n a perfect square, ordered by
/// (a, b). Per a, roots of r^2 = n (mod a) are enumerated via sqrtmod + CRT
/// over a's factorization, so cost grows near-linearly in limit rather than
/// as the quadratic pair scan.
void for_each_compatibility_pair(long long n, long long limit,
                                 const std::function<void(const CompatPair&)>& fn);

std::vector<CompatPair> compatibility_pairs(long long n, long long limit);

struct SearchReport {
    long long n = 0;
    long long limit = 0;  // N
    std::size_t max_size = 0;
    DTuple witness;  // lexicographically smallest optimum
    std::uint64_t nodes_explored = 0;
    std::uint64_t pairs_found = 0;
    std::chrono::milliseconds elapsed{0};
};

/// Exact maximum D(n) tuple inside [1, limit]: a maximum clique of the
/// compatibility graph, found by branch and bound over a degeneracy order
/// with greedy-coloring pruning. Ties break to the lexicographically
/// smallest witness; the report is deterministic.
SearchReport max_tuple(long long n, long long limit);

/// max_tuple(n, n^2) for every n in [from, to] except 0, rows sorted by n.
/// With a cache path, rows already present in the JSONL file are loaded and
/// skipped; each fresh result is appended as one complete line, so an
/// interrupted scan resumes where it stopped. jobs = 0 means one worker per
/// logical core. on_result fires once per freshly computed row.
std::vector<SearchReport> cn_scan(long long from, long long to,
                                  const std::optional<std::string>& cache_path = std::nullopt,
                                  unsigned jobs = 0,
                                  const std::function<void(const SearchReport&)>& on_result = {});

/// One row in the cache format:
/// {"n":-299,"N":89401,"c":5,"witness":[...],"nodes":...,"ms":...}
std::string to_cache_line(const SearchReport& r);

}  // namespace dtuple
