#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sidonlab/intmath.hpp"
#include "sidonlab/primes.hpp"
#include "sidonlab/sidon.hpp"
#include "sidonlab/singer.hpp"
#include "sidonlab/transfer.hpp"

namespace sidonlab::extremal {

using std::int64_t;
using std::uint64_t;

inline constexpr int64_t kDefaultCap = 200;
inline constexpr int64_t kSpanCapMax = 4096;

namespace detail {

// Mark positions and pairwise distances live in W-word bitsets, bit index ==
// distance value. `lbits` holds the distances from the most recent mark back
// to every earlier mark (bit 0 set for the mark itself); `dist` holds all
// pairwise distances. Placing a mark at offset delta past the last one is
// then two shift-or passes, and a candidate offset conflicts exactly when
// (lbits << delta) intersects dist.
template <int W>
struct BitState {
    uint64_t dist[W];
    uint64_t lbits[W];
};

template <int W>
inline void shl_or(uint64_t* out, const uint64_t* src, int64_t sh) {  // out |= src << sh
    int wo = static_cast<int>(sh >> 6), bs = static_cast<int>(sh & 63);
    if (bs == 0) {
        for (int i = W - 1; i >= wo; --i) out[i] |= src[i - wo];
    } else {
        for (int i = W - 1; i >= wo; --i) {
            uint64_t v = src[i - wo] << bs;
            if (i - wo - 1 >= 0) v |= src[i - wo - 1] >> (64 - bs);
            out[i] |= v;
        }
    }
}

template <int W>
inline void shr_or(uint64_t* out, const uint64_t* src, int64_t sh) {  // out |= src >> sh
    int wo = static_cast<int>(sh >> 6), bs = static_cast<int>(sh & 63);
    if (bs == 0) {
        for (int i = 0; i + wo < W; ++i) out[i] |= src[i + wo];
    } else {
        for (int i = 0; i + wo < W; ++i) {
            uint64_t v = src[i + wo] >> bs;
            if (i + wo + 1 < W) v |= src[i + wo + 1] << (64 - bs);
            out[i] |= v;
        }
    }
}

template <int W>
inline void apply_mark(const BitState<W>& in, int64_t delta, BitState<W>& out) {
    uint64_t shifted[W] = {};
    shl_or<W>(shifted, in.lbits, delta);
    for (int i = 0; i < W; ++i) {
        out.dist[i] = in.dist[i] | shifted[i];
        out.lbits[i] = shifted[i];
    }
    out.lbits[0] |= 1;
}

// Forbidden next offsets: delta conflicts iff some distance ell from the last
// mark satisfies (delta + ell) in dist, i.e. comp = OR over ell of dist >> ell.
template <int W>
inline void conflicts(const BitState<W>& st, uint64_t* comp) {
    for (int i = 0; i < W; ++i) comp[i] = 0;
    for (int wi = 0; wi < W; ++wi) {
        uint64_t bits = st.lbits[wi];
        while (bits) {
            int b = __builtin_ctzll(bits);
            bits &= bits - 1;
            shr_or<W>(comp, st.dist, (static_cast<int64_t>(wi) << 6) + b);
        }
    }
}

// The r consecutive gaps still to be placed are pairwise distinct positive
// values unused as distances so far; their minimal possible total is the sum
// of the r smallest free bits. Returns budget + 1 once that is exceeded.
template <int W>
inline int64_t smallest_free_sum(const uint64_t* dist, int64_t r, int64_t budget) {
    int64_t sum = 0, taken = 0;
    for (int wi = 0; wi < W && taken < r; ++wi) {
        uint64_t free = ~dist[wi];
        if (wi == 0) free &= ~uint64_t{1};
        while (free && taken < r) {
            int b = __builtin_ctzll(free);
            free &= free - 1;
            sum += (static_cast<int64_t>(wi) << 6) + b;
            if (sum > budget) return budget + 1;
            ++taken;
        }
    }
    return taken == r ? sum : budget + 1;
}

template <int W>
class Engine {
  public:
    Engine(int64_t span_cap, const std::vector<int64_t>& min_span)
        : cap_(span_cap), ms_(min_span) {}

    static BitState<W> root() {
        BitState<W> st = {};
        st.lbits[0] = 1;
        return st;
    }

    // Branch and bound for the minimal span of m marks; best only shrinks.
    void run_min(const BitState<W>& st, int64_t last, int64_t count, int64_t m,
                 std::atomic<int64_t>& best, uint64_t& nodes, bool mirror) {
        if (count == m) {
            int64_t cur = best.load(std::memory_order_relaxed);
            while (last < cur && !best.compare_exchange_weak(cur, last)) {}
            return;
        }
        int64_t remaining = m - count;
        int64_t budget = best.load(std::memory_order_relaxed) - 1 - last;
        if (smallest_free_sum<W>(st.dist, remaining, budget) > budget) return;
        int64_t tail = tail_span(remaining);

        uint64_t comp[W];
        conflicts<W>(st, comp);
        for (int wi = 0; wi < W; ++wi) {
            uint64_t free = ~comp[wi];
            if (wi == 0) free &= ~uint64_t{1};
            while (free) {
                int b = __builtin_ctzll(free);
                free &= free - 1;
                int64_t delta = (static_cast<int64_t>(wi) << 6) + b;
                int64_t v = last + delta;
                int64_t hi = best.load(std::memory_order_relaxed) - 1 - tail;
                // Mirror cut: for m >= 3 the first gap of some optimal set is
                // strictly below half the span (gaps are distinct, so one of
                // the set and its reversal qualifies).
                if (mirror && count == 1 && m >= 3)
                    hi = std::min(hi, (best.load(std::memory_order_relaxed) - 2) / 2);
                if (v > hi) return;
                ++nodes;
                BitState<W> next;
                apply_mark<W>(st, delta, next);
                run_min(next, v, count + 1, m, best, nodes, mirror);
            }
        }
    }

    // Lexicographic first fit: candidates ascend, so the first completed set
    // is the lexicographic minimum. Returns true once pos[] is filled.
    bool run_lex(const BitState<W>& st, int64_t last, int64_t count, int64_t m, int64_t limit,
                 std::vector<int64_t>& pos, uint64_t& nodes) {
        if (count == m) return true;
        int64_t remaining = m - count;
        int64_t budget = limit - last;
        if (smallest_free_sum<W>(st.dist, remaining, budget) > budget) return false;
        int64_t hi = limit - tail_span(remaining);

        uint64_t comp[W];
        conflicts<W>(st, comp);
        for (int wi = 0; wi < W; ++wi) {
            uint64_t free = ~comp[wi];
            if (wi == 0) free &= ~uint64_t{1};
            while (free) {
                int b = __builtin_ctzll(free);
                free &= free - 1;
                int64_t delta = (static_cast<int64_t>(wi) << 6) + b;
                int64_t v = last + delta;
                if (v > hi) return false;
                ++nodes;
                pos[static_cast<std::size_t>(count)] = v;
                BitState<W> next;
                apply_mark<W>(st, delta, next);
                if (run_lex(next, v, count + 1, m, limit, pos, nodes)) return true;
            }
        }
        return false;
    }

  private:
    int64_t tail_span(int64_t marks) const {
        if (marks < static_cast<int64_t>(ms_.size()))
            return ms_[static_cast<std::size_t>(marks)];
        return marks * (marks - 1) / 2;  // pair-difference counting bound
    }

    int64_t cap_;
    const std::vector<int64_t>& ms_;
};

}  // namespace detail

// Exact-maximum machinery for interval Sidon sets, organized around minimal
// spans: span(m) is the least last-minus-first over all m-element Sidon sets,
// so h(N) is the largest m with span(m) <= N - 1. Spans come from
// depth-first branch and bound over increasing marks; witnesses from a
// lexicographic first-fit pass sharing the same engine.
class HSolver {
  public:
    explicit HSolver(int64_t span_cap, int workers = 1)
        : span_cap_(span_cap), workers_(std::max(workers, 1)) {
        if (span_cap_ < 0 || span_cap_ > kSpanCapMax)
            throw std::invalid_argument("HSolver: span cap out of range");
        min_span_ = {0, 0};  // 0 and 1 marks span 0
    }

    int64_t span_cap() const { return span_cap_; }
    uint64_t nodes() const { return nodes_; }

    // Minimal span of an m-element Sidon set, or nullopt if it exceeds the cap.
    std::optional<int64_t> min_span(int64_t m) {
        if (m < 0) throw std::invalid_argument("HSolver: negative size");
        ensure(m);
        if (m < static_cast<int64_t>(min_span_.size()))
            return min_span_[static_cast<std::size_t>(m)];
        return std::nullopt;
    }

    // h(N) = max |A| over interval Sidon A in {1..N}.
    int64_t h_of(int64_t n) {
        if (n < 1) throw std::invalid_argument("HSolver: N must be >= 1");
        if (n - 1 > span_cap_) throw std::invalid_argument("HSolver: N exceeds solver span cap");
        int64_t h = 1;
        while (true) {
            auto s = min_span(h + 1);
            if (!s || *s > n - 1) break;
            ++h;
        }
        return h;
    }

    // Lexicographically smallest m-element Sidon subset of {1..n}.
    IntSet lex_min_witness(int64_t n, int64_t m) {
        if (m < 1) throw std::invalid_argument("HSolver: witness size must be >= 1");
        ensure(m);
        if (m >= static_cast<int64_t>(min_span_.size()) ||
            min_span_[static_cast<std::size_t>(m)] > n - 1)
            throw std::invalid_argument("HSolver: no witness of that size exists in {1..N}");
        if (m == 1) return {1};

        std::vector<int64_t> pos(static_cast<std::size_t>(m), 0);
        bool found = dispatch_lex(m, n - 1, pos);
        if (!found) throw std::logic_error("HSolver: witness search failed after span bootstrap");
        IntSet out(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) out[i] = pos[i] + 1;
        return out;
    }

  private:
    void ensure(int64_t m) {
        while (!exhausted_ && static_cast<int64_t>(min_span_.size()) <= m) {
            int64_t next = static_cast<int64_t>(min_span_.size());
            if (next * (next - 1) / 2 > span_cap_) {  // cannot fit by difference counting
                exhausted_ = true;
                break;
            }
            auto s = dispatch_min(next);
            if (!s) {
                exhausted_ = true;
                break;
            }
            min_span_.push_back(*s);
        }
    }

    template <int W>
    std::optional<int64_t> search_min(int64_t m) {
        detail::Engine<W> eng(span_cap_, min_span_);
        std::atomic<int64_t> best{span_cap_ + 1};
        auto root = detail::Engine<W>::root();
        if (workers_ == 1) {
            uint64_t nodes = 0;
            eng.run_min(root, 0, 1, m, best, nodes, /*mirror=*/true);
            nodes_ += nodes;
        } else {
            // First-mark branches share only the monotone best bound.
            std::atomic<int64_t> cursor{1};
            std::atomic<uint64_t> total_nodes{0};
            auto work = [&]() {
                uint64_t nodes = 0;
                while (true) {
                    int64_t v = cursor.fetch_add(1);
                    int64_t b = best.load(std::memory_order_relaxed);
                    if (v > b - 1 || (m >= 3 && 2 * v > b - 2)) break;
                    detail::BitState<W> seed;
                    detail::apply_mark<W>(root, v, seed);
                    ++nodes;
                    eng.run_min(seed, v, 2, m, best, nodes, /*mirror=*/false);
                }
                total_nodes.fetch_add(nodes);
            };
            std::vector<std::thread> pool;
            for (int w = 0; w < workers_; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
            nodes_ += total_nodes.load();
        }
        int64_t b = best.load();
        if (b > span_cap_) return std::nullopt;
        return b;
    }

    template <int W>
    bool search_lex(int64_t m, int64_t limit, std::vector<int64_t>& pos) {
        detail::Engine<W> eng(span_cap_, min_span_);
        auto root = detail::Engine<W>::root();
        pos[0] = 0;
        return eng.run_lex(root, 0, 1, m, limit, pos, nodes_);
    }

    std::optional<int64_t> dispatch_min(int64_t m) {
        switch (words()) {
            case 1: return search_min<1>(m);
            case 2: return search_min<2>(m);
            case 3: return search_min<3>(m);
            case 4: return search_min<4>(m);
            case 8: return search_min<8>(m);
            case 16: return search_min<16>(m);
            case 32: return search_min<32>(m);
            default: return search_min<64>(m);
        }
    }

    bool dispatch_lex(int64_t m, int64_t limit, std::vector<int64_t>& pos) {
        switch (words()) {
            case 1: return search_lex<1>(m, limit, pos);
            case 2: return search_lex<2>(m, limit, pos);
            case 3: return search_lex<3>(m, limit, pos);
            case 4: return search_lex<4>(m, limit, pos);
            case 8: return search_lex<8>(m, limit, pos);
            case 16: return search_lex<16>(m, limit, pos);
            case 32: return search_lex<32>(m, limit, pos);
            default: return search_lex<64>(m, limit, pos);
        }
    }

    int words() const {
        int w = static_cast<int>(span_cap_ / 64) + 1;
        for (int c : {1, 2, 3, 4, 8, 16, 32, 64})
            if (w <= c) return c;
        return 64;
    }

    int64_t span_cap_;
    int workers_;
    std::vector<int64_t> min_span_;
    bool exhausted_ = false;
    uint64_t nodes_ = 0;
};

// Exact h(N) with the lexicographically smallest maximum witness.
struct HResult {
    int64_t n = 0;
    int64_t h = 0;
    IntSet witness;
    uint64_t nodes = 0;
};

inline HResult h_exact(int64_t n, int64_t cap = kDefaultCap, int workers = 1) {
    if (n < 1) throw std::invalid_argument("h_exact: N must be >= 1");
    if (cap < 1 || cap > kSpanCapMax) throw std::invalid_argument("h_exact: cap out of range");
    if (n > cap)
        throw std::invalid_argument("h_exact: N exceeds the search cap (" + std::to_string(cap) + ")");
    HSolver solver(n - 1, workers);
    HResult r;
    r.n = n;
    r.h = solver.h_of(n);
    r.witness = solver.lex_min_witness(n, r.h);
    r.nodes = solver.nodes();
    return r;
}

// h(N) for every N in [lo, hi], sharing one span bootstrap.
inline std::vector<HResult> h_range(int64_t lo, int64_t hi, int64_t cap = kDefaultCap,
                                    int workers = 1) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("h_range: bad range");
    if (hi > cap) throw std::invalid_argument("h_range: range exceeds cap");
    HSolver solver(hi - 1, workers);
    std::vector<HResult> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int64_t n = lo; n <= hi; ++n) {
        HResult r;
        r.n = n;
        r.h = solver.h_of(n);
        r.witness = solver.lex_min_witness(n, r.h);
        r.nodes = solver.nodes();
        out.push_back(std::move(r));
    }
    return out;
}

inline int64_t pair_diff_upper(int64_t n) {
    if (n < 1) throw std::invalid_argument("pair_diff_upper: N must be >= 1");
    return isqrt(2 * n) + 1;
}

inline int64_t johnson_upper(int64_t n) {
    if (n < 16) throw std::domain_error("johnson_upper: defined for N >= 16 only");
    int64_t r = isqrt(n);
    return r + isqrt(r) + 2;
}

inline int64_t lower_floor(int64_t n) {
    if (n < 1) throw std::invalid_argument("lower_floor: N must be >= 1");
    return (isqrt(n) + 1) / 2;
}

// Corollary-style partial check, exact integer form of |h - sqrt(N)| <= sqrt(N).
inline bool partial_check(int64_t n, int64_t h) { return h * h <= 4 * n; }

struct CheckReport {
    bool ok = true;
    std::string message;
};

// Lindstrom cross-differences: for every split point k, the differences
// a_j - a_i with i <= k < j are distinct, lie in {1..N-1}, and number
// (m-k)*k <= N-1.
inline CheckReport cross_difference_check(const IntSet& a, int64_t n) {
    if (!is_interval_sidon(n, a).verified)
        throw std::invalid_argument("cross_difference_check: input is not interval Sidon in {1..N}");
    int64_t m = static_cast<int64_t>(a.size());
    for (int64_t k = 1; k <= m; ++k) {
        std::vector<int64_t> diffs;
        for (int64_t i = 0; i < k; ++i)
            for (int64_t j = k; j < m; ++j)
                diffs.push_back(a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]);
        for (int64_t d : diffs)
            if (d < 1 || d > n - 1)
                return {false, "cross-difference out of range at k=" + std::to_string(k)};
        std::sort(diffs.begin(), diffs.end());
        if (std::adjacent_find(diffs.begin(), diffs.end()) != diffs.end())
            return {false, "repeated cross-difference at k=" + std::to_string(k)};
        if ((m - k) * k > n - 1)
            return {false, "count bound violated at k=" + std::to_string(k)};
    }
    return {};
}

// |A intersect (A + t)|, two-pointer scan.
inline int64_t shift_intersection_count(const IntSet& a, int64_t t) {
    int64_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < a.size()) {
        int64_t shifted = a[j] + t;
        if (a[i] == shifted) { ++count; ++i; ++j; }
        else if (a[i] < shifted) ++i;
        else ++j;
    }
    return count;
}

// Shift incidences: |A intersect (A + t)| <= 1 for every nonzero shift.
inline CheckReport shift_intersection_check(const IntSet& a) {
    if (!is_sidon(a).verified)
        throw std::invalid_argument("shift_intersection_check: input is not Sidon");
    if (a.size() < 2) return {};
    int64_t span = a.back() - a.front();
    for (int64_t t = 1; t <= span; ++t) {
        for (int64_t s : {t, -t}) {
            int64_t count = shift_intersection_count(a, s);
            if (count > 1)
                return {false, "shift t=" + std::to_string(s) + " meets A in " +
                                   std::to_string(count) + " points"};
        }
    }
    return {};
}

// Singer-via-Bertrand lower bound pipeline. For N >= 9 the witness is the
// full transfer of a Singer set at the Singer threshold; for 5 <= N < 9 the
// explicit set {1, 2} suffices.
struct BertrandLower {
    int64_t n = 0;
    int64_t sqrt_floor = 0;   // m = floor(sqrt(N))
    int64_t half_index = 0;   // n' = floor((m-1)/2)
    int64_t prime = 0;        // Bertrand prime in (n', 2n'], 0 for the small cases
    IntSet witness;
    int64_t bound = 0;        // floor((floor(sqrt(N)) + 1) / 2)
};

inline BertrandLower bertrand_lower(int64_t n) {
    if (n < 5) throw std::invalid_argument("bertrand_lower: N must be >= 5");
    BertrandLower out;
    out.n = n;
    out.sqrt_floor = isqrt(n);
    out.bound = lower_floor(n);

    if (n < 9) {
        out.witness = {1, 2};
    } else {
        out.half_index = (out.sqrt_floor - 1) / 2;
        out.prime = primes::bertrand_prime(out.half_index);
        int64_t p = out.prime;
        int64_t threshold = transfer::singer_threshold(p);
        if (p >= 4) {
            // Containment chain: threshold <= p^2 + 1 <= (2n'+1)^2 <= m^2 <= N.
            int64_t np = out.half_index;
            if (!(threshold <= p * p + 1 && p * p + 1 <= 4 * np * np + 1 &&
                  4 * np * np + 1 <= (2 * np + 1) * (2 * np + 1) &&
                  (2 * np + 1) * (2 * np + 1) <= out.sqrt_floor * out.sqrt_floor &&
                  out.sqrt_floor * out.sqrt_floor <= n))
                throw std::logic_error("bertrand_lower: containment chain failed (internal bug)");
        } else if (threshold > n) {
            throw std::logic_error("bertrand_lower: small-prime threshold exceeds N (internal bug)");
        }
        singer::SingerSet s = singer::build_singer_set(p);
        transfer::TransferResult tr = transfer::full_transfer(s.residues, s.modulus, threshold);
        out.witness = tr.image;
    }

    if (!is_interval_sidon(n, out.witness).verified)
        throw std::logic_error("bertrand_lower: witness failed interval verification (internal bug)");
    if (static_cast<int64_t>(out.witness.size()) <= out.bound)
        throw std::logic_error("bertrand_lower: witness does not beat the floor bound (internal bug)");
    return out;
}

// One row of the bounds table; flags record every inequality of the sandwich.
struct BoundsRow {
    int64_t n = 0;
    int64_t h = 0;
    int64_t lower = 0;       // floor((floor(sqrt N)+1)/2)
    int64_t upper_pd = 0;    // floor(sqrt(2N)) + 1
    int64_t upper_johnson = -1;  // defined for N >= 16
    bool lower_ok = false;
    bool upper_pd_ok = false;
    bool johnson_ok = true;  // vacuously true below 16
    bool partial_ok = false;

    bool all_ok() const { return lower_ok && upper_pd_ok && johnson_ok && partial_ok; }
};

inline BoundsRow bounds_row_with_h(int64_t n, int64_t h) {
    if (n < 5) throw std::invalid_argument("bounds_row: N must be >= 5");
    BoundsRow row;
    row.n = n;
    row.h = h;
    row.lower = lower_floor(n);
    row.upper_pd = pair_diff_upper(n);
    row.lower_ok = row.lower < h;
    row.upper_pd_ok = h <= row.upper_pd;
    if (n >= 16) {
        row.upper_johnson = johnson_upper(n);
        row.johnson_ok = h <= row.upper_johnson;
    }
    row.partial_ok = partial_check(n, h);
    return row;
}

inline BoundsRow bounds_row(int64_t n, int64_t cap = kDefaultCap, int workers = 1) {
    return bounds_row_with_h(n, h_exact(n, cap, workers).h);
}

// Monotonicity sweep: h nondecreasing, positive, and stepping by at most one.
inline CheckReport h_monotone_check(int64_t lo, int64_t hi, int64_t cap = kDefaultCap,
                                    int workers = 1) {
    auto results = h_range(lo, hi, cap, workers);
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].h < 1)
            return {false, "h(" + std::to_string(results[i].n) + ") < 1"};
        if (i > 0) {
            if (results[i].h < results[i - 1].h)
                return {false, "h decreases at N=" + std::to_string(results[i].n)};
            if (results[i].h > results[i - 1].h + 1)
                return {false, "h jumps by more than one at N=" + std::to_string(results[i].n)};
        }
    }
    return {};
}

}  // namespace sidonlab::extremal
