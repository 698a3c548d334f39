#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidonlab/sidon.hpp"

namespace sidonlab::transfer {

using std::int64_t;

// A cyclic-window relabeling of a modular Sidon set into {1, ..., N}.
struct TransferResult {
    IntSet source;     // residues in [0, M)
    int64_t modulus = 0;
    int64_t offset = 0;
    int64_t window = 0;  // N
    IntSet image;        // subset of {1, ..., N}
    bool full = false;   // |image| == |source|
};

namespace detail {

inline void require_residues(const IntSet& s, int64_t m) {
    require_int_set(s);
    for (int64_t r : s)
        if (r < 0 || r >= m)
            throw std::invalid_argument("transfer: residues must lie in [0, M)");
}

inline void require_modular_sidon(const IntSet& s, int64_t m) {
    if (!is_sidon_mod(m, s).verified)
        throw std::invalid_argument("transfer: source set is not Sidon modulo M");
}

}  // namespace detail

// Restrict S to the window of length N starting at offset u, relabeled to
// {1, ..., N}. The image of a modular Sidon set is interval Sidon; that is
// re-verified rather than trusted.
inline TransferResult window_restrict(const IntSet& s, int64_t m, int64_t u, int64_t n) {
    if (n < 1 || n > m) throw std::invalid_argument("window_restrict: need 0 < N <= M");
    if (u < 0 || u >= m) throw std::invalid_argument("window_restrict: offset must lie in [0, M)");
    detail::require_residues(s, m);
    detail::require_modular_sidon(s, m);

    TransferResult tr;
    tr.source = s;
    tr.modulus = m;
    tr.offset = u;
    tr.window = n;
    for (int64_t x : s) {
        int64_t pos = ((x - u) % m + m) % m;
        if (pos < n) tr.image.push_back(pos + 1);
    }
    std::sort(tr.image.begin(), tr.image.end());
    tr.full = tr.image.size() == s.size();
    if (!is_interval_sidon(n, tr.image).verified)
        throw std::logic_error("window_restrict: image failed interval Sidon re-verification");
    return tr;
}

// Scan all M offsets; return the smallest offset attaining the maximum
// window cardinality. Averaging guarantees the maximum is at least
// ceil(|S| * N / M).
inline std::pair<int64_t, int64_t> best_offset(const IntSet& s, int64_t m, int64_t n) {
    if (n < 1 || n > m) throw std::invalid_argument("best_offset: need 0 < N <= M");
    detail::require_residues(s, m);
    int64_t best_u = 0, best_card = -1;
    for (int64_t u = 0; u < m; ++u) {
        int64_t card = 0;
        for (int64_t x : s)
            if (((x - u) % m + m) % m < n) ++card;
        if (card > best_card) { best_card = card; best_u = u; }
    }
    int64_t s_sz = static_cast<int64_t>(s.size());
    int64_t guaranteed = (s_sz * n + m - 1) / m;  // ceil(sN/M)
    if (best_card < guaranteed)
        throw std::logic_error("best_offset: averaging bound violated (internal bug)");
    return {best_u, best_card};
}

// Cyclic forward gaps of the sorted residues, wraparound included. For a
// modular Sidon source the gaps are pairwise distinct and the largest one is
// at least floor((M + s(s-1)/2) / s).
struct GapProfile {
    IntSet residues;
    int64_t modulus = 0;
    std::vector<int64_t> gaps;  // gaps[i] = r[i+1] - r[i], last wraps around
    int64_t max_gap = 0;
    std::size_t max_gap_index = 0;
    bool distinct = false;
    int64_t floor_threshold = 0;  // floor((M + s(s-1)/2) / s)
};

inline GapProfile gap_profile(const IntSet& s, int64_t m) {
    if (s.empty()) throw std::invalid_argument("gap_profile: set must be nonempty");
    detail::require_residues(s, m);
    GapProfile gp;
    gp.residues = s;
    gp.modulus = m;
    std::size_t k = s.size();
    for (std::size_t i = 0; i + 1 < k; ++i) gp.gaps.push_back(s[i + 1] - s[i]);
    gp.gaps.push_back(m - s[k - 1] + s[0]);
    for (std::size_t i = 0; i < gp.gaps.size(); ++i)
        if (gp.gaps[i] > gp.max_gap) { gp.max_gap = gp.gaps[i]; gp.max_gap_index = i; }
    std::vector<int64_t> sorted = gp.gaps;
    std::sort(sorted.begin(), sorted.end());
    gp.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    int64_t sz = static_cast<int64_t>(k);
    gp.floor_threshold = (m + sz * (sz - 1) / 2) / sz;
    return gp;
}

// Minimal window length admitting a full-size transfer of an s-element set
// mod M: N >= M - floor((M + s(s-1)/2)/s) + 1.
inline int64_t full_transfer_min_window(int64_t s, int64_t m) {
    if (s < 1) throw std::invalid_argument("full_transfer_min_window: set size must be >= 1");
    return m - (m + s * (s - 1) / 2) / s + 1;
}

// Full-size transfer: delete a largest cyclic gap (smallest index on ties)
// and start the window at the residue that follows it. Returns an image of
// size |S| inside {1, ..., N}; re-verified end to end.
inline TransferResult full_transfer(const IntSet& s, int64_t m, int64_t n) {
    if (s.empty()) throw std::invalid_argument("full_transfer: set must be nonempty");
    if (n < 1 || n > m) throw std::invalid_argument("full_transfer: need 0 < N <= M");
    detail::require_residues(s, m);
    detail::require_modular_sidon(s, m);

    int64_t min_n = full_transfer_min_window(static_cast<int64_t>(s.size()), m);
    if (n < min_n)
        throw std::invalid_argument("full_transfer: window too short; minimal admissible N is " +
                                    std::to_string(min_n));

    GapProfile gp = gap_profile(s, m);
    if (!gp.distinct)
        throw std::logic_error("full_transfer: modular Sidon source with equal cyclic gaps (internal bug)");
    int64_t start = s[(gp.max_gap_index + 1) % s.size()];
    TransferResult tr = window_restrict(s, m, start, n);
    if (!tr.full)
        throw std::logic_error("full_transfer: transfer lost elements (internal bug)");
    return tr;
}

// Singer-parameter transfer threshold p^2 + p + 2 - floor(3p/2), with its
// algebraic twin p^2 + 2 - floor(p/2); at most p^2 once p >= 4.
inline int64_t singer_threshold(int64_t p) {
    if (p < 1) throw std::invalid_argument("singer_threshold: p must be >= 1");
    int64_t t = p * p + p + 2 - (3 * p) / 2;
    if (t != p * p + 2 - p / 2)
        throw std::logic_error("singer_threshold: floor identity failed (internal bug)");
    if (p >= 4 && t > p * p)
        throw std::logic_error("singer_threshold: threshold exceeds p^2 for p >= 4 (internal bug)");
    return t;
}

}  // namespace sidonlab::transfer
