#include "dtuple/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "dtuple/arith.hpp"

namespace dtuple {

namespace {

// The factor table is the memory ceiling: 2^24 keeps it at 64 MiB and covers
// C_n scans to |n| = 4096, an order of magnitude past the desk-scale range.
constexpr long long kMaxLimit = 1LL << 24;
constexpr long long kMaxAbsN = 1LL << 61;

long long ll_isqrt(long long v) {
    if (v < 0) return -1;
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Smallest-prime-factor table for 2..n.
std::vector<std::uint32_t> build_spf(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n; j += i) {
            if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

// Cached roots of r^2 = n (mod q) per prime power q.
class RootCache {
public:
    explicit RootCache(long long n) : n_(n) {}

    const std::vector<std::uint32_t>& get(std::uint32_t p, std::uint32_t q, unsigned alpha) {
        auto it = cache_.find(q);
        if (it != cache_.end()) return it->second;
        Int v(static_cast<long>(n_ % static_cast<long long>(q)));
        auto roots = sqrtmod_prime_power(v, Int(static_cast<unsigned long>(p)), alpha);
        std::vector<std::uint32_t> small;
        small.reserve(roots.size());
        for (const Int& r : roots) small.push_back(static_cast<std::uint32_t>(r.get_ui()));
        return cache_.emplace(q, std::move(small)).first->second;
    }

private:
    long long n_;
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> cache_;
};

long long egcd_inv(long long a, long long m) {
    // inverse of a mod m, gcd(a, m) = 1
    long long old_r = a % m, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long qt = old_r / r;
        old_r -= qt * r;
        std::swap(old_r, r);
        old_s -= qt * s;
        std::swap(old_s, s);
    }
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

// Enumerates pairs a < b <= limit with a*b + n = root^2, grouped by a in
// ascending b order. Returns the number of pairs.
template <typename Fn>
std::uint64_t enumerate_pairs(long long n, long long limit, Fn&& emit) {
    const auto spf = build_spf(static_cast<std::uint32_t>(limit));
    RootCache roots(n);

    std::vector<long long> classes, merged;
    std::vector<std::pair<long long, long long>> found;  // (b, root)

    std::uint64_t pairs = 0;
    for (long long a = 1; a <= limit; ++a) {
        // Residues r mod a with r^2 = n (mod a), via CRT over a's factors.
        classes.assign(1, 0);
        long long mod = 1;
        bool feasible = true;
        for (std::uint32_t rest = static_cast<std::uint32_t>(a); rest > 1;) {
            const std::uint32_t p = spf[rest];
            std::uint32_t q = 1;
            unsigned alpha = 0;
            while (rest % p == 0) {
                rest /= p;
                q *= p;
                ++alpha;
            }
            const auto& rq = roots.get(p, q, alpha);
            if (rq.empty()) {
                feasible = false;
                break;
            }
            const long long inv = egcd_inv(mod % q, q);
            merged.clear();
            merged.reserve(classes.size() * rq.size());
            for (long long x : classes) {
                for (std::uint32_t r : rq) {
                    // y = x (mod mod), y = r (mod q)
                    long long delta = (static_cast<long long>(r) - x) % q;
                    if (delta < 0) delta += q;
                    merged.push_back(x + mod * (delta * inv % q));
                }
            }
            classes.swap(merged);
            mod *= q;
        }
        if (!feasible) continue;

        // b = (r^2 - n)/a in (a, limit]  <=>  r^2 in (a^2 + n, a*limit + n]
        const long long hi_val = a * limit + n;
        if (hi_val < 0) continue;
        const long long r_hi = ll_isqrt(hi_val);
        const long long lo_val = a * a + n;
        const long long r_lo = lo_val < 0 ? 0 : ll_isqrt(lo_val) + 1;
        if (r_lo > r_hi) continue;

        found.clear();
        for (long long c : classes) {
            long long r = c;
            if (r < r_lo) r += a * ((r_lo - c + a - 1) / a);
            for (; r <= r_hi; r += a) found.emplace_back((r * r - n) / a, r);
        }
        std::sort(found.begin(), found.end());
        for (const auto& [b, root] : found) {
            emit(a, b, root);
            ++pairs;
        }
    }
    return pairs;
}

void check_search_args(long long n, long long limit) {
    if (n == 0) throw input_error("n must be nonzero");
    if (n > kMaxAbsN || n < -kMaxAbsN) throw input_error("n beyond supported range");
    if (limit > kMaxLimit) throw input_error("limit beyond supported range");
}

// Compatibility graph on the elements of [1, limit] incident to at least one
// edge, with vertices ordered by element value.
struct Graph {
    std::vector<long long> elem;
    std::vector<std::vector<int>> adj;
};

Graph build_graph(long long n, long long limit, std::uint64_t* pairs_out) {
    std::vector<std::pair<long long, long long>> edges;
    std::uint64_t pairs = enumerate_pairs(n, limit, [&](long long a, long long b, long long) {
        edges.emplace_back(a, b);
    });
    if (pairs_out) *pairs_out = pairs;

    Graph g;
    g.elem.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        g.elem.push_back(a);
        g.elem.push_back(b);
    }
    std::sort(g.elem.begin(), g.elem.end());
    g.elem.erase(std::unique(g.elem.begin(), g.elem.end()), g.elem.end());

    auto id_of = [&](long long v) {
        return static_cast<int>(std::lower_bound(g.elem.begin(), g.elem.end(), v) -
                                g.elem.begin());
    };
    g.adj.resize(g.elem.size());
    for (const auto& [a, b] : edges) {
        const int ia = id_of(a), ib = id_of(b);
        g.adj[ia].push_back(ib);
        g.adj[ib].push_back(ia);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<int> degeneracy_order(const Graph& g) {
    const int m = static_cast<int>(g.elem.size());
    std::vector<int> degree(m), order;
    order.reserve(m);
    std::vector<char> removed(m, 0);
    int max_deg = 0;
    for (int v = 0; v < m; ++v) {
        degree[v] = static_cast<int>(g.adj[v].size());
        max_deg = std::max(max_deg, degree[v]);
    }
    // Lazy bucket queue: stale entries are skipped on pop; cursor never sits
    // above the true minimum because every decrement lowers it as needed.
    std::vector<std::vector<int>> buckets(max_deg + 1);
    for (int v = 0; v < m; ++v) buckets[degree[v]].push_back(v);
    int cursor = 0;
    for (int done = 0; done < m; ++done) {
        int v = -1;
        while (v == -1) {
            while (buckets[cursor].empty()) ++cursor;
            int cand = buckets[cursor].back();
            buckets[cursor].pop_back();
            if (!removed[cand] && degree[cand] == cursor) v = cand;
        }
        removed[v] = 1;
        order.push_back(v);
        for (int u : g.adj[v]) {
            if (!removed[u]) {
                buckets[--degree[u]].push_back(u);
                cursor = std::min(cursor, degree[u]);
            }
        }
    }
    return order;
}

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::uint64_t nodes() const { return nodes_; }

    bool adjacent(int u, int v) const {
        const auto& nbrs = g_.adj[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    // Exact maximum clique size (0 on an empty graph).
    std::size_t max_size() {
        best_ = 0;
        const auto order = degeneracy_order(g_);
        std::vector<int> pos(g_.elem.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        std::vector<int> cand;
        for (int v : order) {
            cand.clear();
            for (int u : g_.adj[v]) {
                if (pos[u] > pos[v]) cand.push_back(u);
            }
            expand(1, cand);
        }
        return best_;
    }

    // True when cand contains a clique of k vertices.
    bool exists_clique(const std::vector<int>& cand, std::size_t k) {
        ++nodes_;
        if (k == 0) return true;
        if (cand.size() < k) return false;
        std::vector<int> sorted, bound;
        color(cand, sorted, bound);
        std::vector<int> next;
        for (std::size_t i = sorted.size(); i-- > 0;) {
            // bound is nondecreasing, so it caps every clique in sorted[0..i]
            if (static_cast<std::size_t>(bound[i]) < k) return false;
            next.clear();
            for (std::size_t j = 0; j < i; ++j) {
                if (adjacent(sorted[j], sorted[i])) next.push_back(sorted[j]);
            }
            if (exists_clique(next, k - 1)) return true;
        }
        return false;
    }

private:
    void expand(std::size_t rsize, const std::vector<int>& cand) {
        ++nodes_;
        best_ = std::max(best_, rsize);
        if (cand.empty() || rsize + cand.size() <= best_) return;
        std::vector<int> sorted, bound;
        color(cand, sorted, bound);
        std::vector<int> next;
        for (std::size_t i = sorted.size(); i-- > 0;) {
            if (rsize + static_cast<std::size_t>(bound[i]) <= best_) return;
            next.clear();
            for (std::size_t j = 0; j < i; ++j) {
                if (adjacent(sorted[j], sorted[i])) next.push_back(sorted[j]);
            }
            expand(rsize + 1, next);
        }
    }

    // Greedy sequential coloring. Output lists cand regrouped class by class
    // with bound[i] = 1-based color of sorted[i]; bound is nondecreasing and
    // bound[i] caps the size of any clique within sorted[0..i]. All state is
    // local so recursive calls cannot clobber a caller's bounds.
    void color(const std::vector<int>& cand, std::vector<int>& sorted,
               std::vector<int>& bound) const {
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int u : classes[c]) {
                    if (adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        sorted.clear();
        bound.clear();
        for (std::size_t c = 0; c < classes.size(); ++c) {
            for (int v : classes[c]) {
                sorted.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
        }
    }

    const Graph& g_;
    std::size_t best_ = 0;
    std::uint64_t nodes_ = 0;
};

// Lexicographically smallest clique of the known maximum size: fix the
// smallest feasible vertex at each position, where feasible means the
// remaining candidates still contain a clique of the residual size.
std::vector<long long> lex_smallest_clique(const Graph& g, CliqueSearch& search,
                                           std::size_t size) {
    std::vector<int> cand(g.elem.size());
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = static_cast<int>(i);

    std::vector<long long> out;
    std::vector<int> filtered;
    while (out.size() < size) {
        bool advanced = false;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const int v = cand[i];
            filtered.clear();
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (search.adjacent(v, cand[j])) filtered.push_back(cand[j]);
            }
            if (search.exists_clique(filtered, size - out.size() - 1)) {
                out.push_back(g.elem[v]);
                cand = filtered;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("lex_smallest_clique: completion lost");
    }
    return out;
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace

void for_each_compatibility_pair(long long n, long long limit,
                                 const std::function<void(const CompatPair&)>& fn) {
    check_search_args(n, limit);
    if (limit < 2) throw input_error("compatibility_pairs: limit must be >= 2");
    enumerate_pairs(n, limit, [&](long long a, long long b, long long root) {
        fn(CompatPair{a, b, root});
    });
}

std::vector<CompatPair> compatibility_pairs(long long n, long long limit) {
    std::vector<CompatPair> out;
    for_each_compatibility_pair(n, limit, [&](const CompatPair& p) { out.push_back(p); });
    return out;
}

SearchReport max_tuple(long long n, long long limit) {
    check_search_args(n, limit);
    if (limit < 1) throw input_error("max_tuple: limit must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.n = n;
    report.limit = limit;

    Graph g;
    if (limit >= 2) g = build_graph(n, limit, &report.pairs_found);

    CliqueSearch search(g);
    std::size_t best = g.elem.empty() ? 0 : search.max_size();
    std::vector<long long> witness;
    if (best <= 1) {
        best = 1;
        witness = {1};  // every singleton qualifies; 1 is the smallest
    } else {
        witness = lex_smallest_clique(g, search, best);
    }
    report.max_size = best;
    report.nodes_explored = search.nodes();

    report.witness.n = static_cast<long>(n);
    for (long long v : witness) report.witness.elements.emplace_back(static_cast<long>(v));
    if (!verify(report.witness.n, report.witness.elements).valid)
        throw std::logic_error("max_tuple: witness failed re-verification");

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::string to_cache_line(const SearchReport& r) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["N"] = r.limit;
    row["c"] = r.max_size;
    std::vector<long long> witness;
    for (const Int& e : r.witness.elements) witness.push_back(e.get_si());
    row["witness"] = witness;
    row["nodes"] = r.nodes_explored;
    row["ms"] = r.elapsed.count();
    return row.dump();
}

namespace {

SearchReport report_from_cache(const nlohmann::json& row) {
    SearchReport r;
    r.n = row.at("n").get<long long>();
    r.limit = row.at("N").get<long long>();
    r.max_size = row.at("c").get<std::size_t>();
    r.witness.n = static_cast<long>(r.n);
    for (const auto& e : row.at("witness"))
        r.witness.elements.emplace_back(e.get<long>());
    r.nodes_explored = row.at("nodes").get<std::uint64_t>();
    r.elapsed = std::chrono::milliseconds(row.at("ms").get<long long>());
    if (row.contains("pairs")) r.pairs_found = row.at("pairs").get<std::uint64_t>();
    return r;
}

std::map<long long, SearchReport> load_cache(const std::string& path) {
    std::map<long long, SearchReport> rows;
    std::ifstream in(path);
    if (!in.is_open()) return rows;  // nothing cached yet

    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        const std::size_t nl = content.find('\n', pos);
        const bool complete = nl != std::string::npos;
        const std::string line = content.substr(pos, complete ? nl - pos : std::string::npos);
        pos = complete ? nl + 1 : content.size();
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto row = nlohmann::json::parse(line);
            auto rep = report_from_cache(row);
            rows[rep.n] = std::move(rep);
        } catch (const std::exception&) {
            if (!complete) break;  // truncated final line is tolerated
            throw io_error("scan cache line " + std::to_string(line_no) + " is corrupt: " + path);
        }
    }
    return rows;
}

}  // namespace

std::vector<SearchReport> cn_scan(long long from, long long to,
                                  const std::optional<std::string>& cache_path, unsigned jobs,
                                  const std::function<void(const SearchReport&)>& on_result) {
    if (from > to) throw input_error("cn_scan: empty range");

    std::map<long long, SearchReport> rows;
    std::ofstream cache_out;
    if (cache_path) {
        rows = load_cache(*cache_path);
        cache_out.open(*cache_path, std::ios::app);
        if (!cache_out.is_open()) throw io_error("scan cache is not writable: " + *cache_path);
    }

    std::vector<long long> work;
    for (long long n = from; n <= to; ++n) {
        if (n != 0 && rows.find(n) == rows.end()) work.push_back(n);
    }

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            const long long n = work[i];
            try {
                SearchReport rep = max_tuple(n, n * n);
                std::lock_guard<std::mutex> lock(mu);
                if (cache_out.is_open()) {
                    cache_out << to_cache_line(rep) << '\n';
                    cache_out.flush();
                }
                if (on_result) on_result(rep);
                rows[n] = std::move(rep);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
                next.store(work.size());
                return;
            }
        }
    };

    const unsigned thread_count =
        std::max(1u, std::min<unsigned>(resolve_jobs(jobs),
                                        work.empty() ? 1u : static_cast<unsigned>(work.size())));
    std::vector<std::thread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<SearchReport> out;
    for (auto& [n, rep] : rows) {
        if (n >= from && n <= to) out.push_back(rep);
    }
    return out;
}

}  // namespace dtuple
