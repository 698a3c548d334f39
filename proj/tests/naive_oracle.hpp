#pragma once

// Test-only brute-force oracles, deliberately independent of the library
// search path: Sidon feasibility here is tracked through pairwise sums, not
// the difference bitsets the solver uses.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

struct NaiveH {
    std::int64_t h = 0;
    std::vector<std::int64_t> witness;  // lexicographically first maximum-size set
    std::uint64_t sets = 0;             // number of Sidon subsets enumerated
};

namespace detail {

inline void enumerate(std::int64_t n, std::int64_t start, std::vector<std::int64_t>& cur,
                      std::vector<char>& sum_used, NaiveH& best) {
    for (std::int64_t v = start; v <= n; ++v) {
        bool ok = !sum_used[static_cast<std::size_t>(2 * v)];
        for (std::int64_t a : cur) {
            if (sum_used[static_cast<std::size_t>(a + v)]) { ok = false; break; }
        }
        if (!ok) continue;
        for (std::int64_t a : cur) sum_used[static_cast<std::size_t>(a + v)] = 1;
        sum_used[static_cast<std::size_t>(2 * v)] = 1;
        cur.push_back(v);
        ++best.sets;
        if (static_cast<std::int64_t>(cur.size()) > best.h) {
            best.h = static_cast<std::int64_t>(cur.size());
            best.witness = cur;
        }
        enumerate(n, v + 1, cur, sum_used, best);
        cur.pop_back();
        sum_used[static_cast<std::size_t>(2 * v)] = 0;
        for (std::int64_t a : cur) sum_used[static_cast<std::size_t>(a + v)] = 0;
    }
}

}  // namespace detail

// Exhaustive enumeration of every Sidon subset of {1..n}. The first
// maximum-size set met in lexicographic DFS order is the lexicographic
// minimum among them.
inline NaiveH naive_h(std::int64_t n) {
    NaiveH best;
    best.h = 0;
    std::vector<std::int64_t> cur;
    std::vector<char> sum_used(static_cast<std::size_t>(2 * n + 1), 0);
    detail::enumerate(n, 1, cur, sum_used, best);
    return best;
}

// Greedy Sidon set from a shuffled pool; deterministic under the seed.
template <typename Rng>
inline std::vector<std::int64_t> random_sidon_set(Rng& rng, int target, std::int64_t range) {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(range));
    for (std::int64_t i = 0; i < range; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::int64_t> cur;
    std::set<std::int64_t> diffs;
    for (std::int64_t v : pool) {
        if (static_cast<int>(cur.size()) >= target) break;
        bool ok = true;
        std::vector<std::int64_t> add;
        for (std::int64_t a : cur) {
            std::int64_t d = v > a ? v - a : a - v;
            if (d == 0 || diffs.count(d)) { ok = false; break; }
            add.push_back(d);
        }
        if (!ok) continue;
        std::set<std::int64_t> dedup(add.begin(), add.end());
        if (dedup.size() != add.size()) continue;
        for (std::int64_t d : add) diffs.insert(d);
        cur.push_back(v);
        std::sort(cur.begin(), cur.end());
    }
    return cur;
}

// Straightforward mod-m difference count for perfect-difference-set checks.
inline bool naive_pds(const std::vector<std::int64_t>& s, std::int64_t m) {
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(m), 0);
    for (std::int64_t a : s)
        for (std::int64_t b : s)
            if (a != b) cnt[static_cast<std::size_t>(((a - b) % m + m) % m)]++;
    for (std::int64_t r = 1; r < m; ++r)
        if (cnt[static_cast<std::size_t>(r)] != 1) return false;
    return true;
}

}  // namespace oracle
