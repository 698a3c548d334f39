#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sidonlab {

// Exact integer square root: largest r with r*r <= n. Newton iteration on
// integers only; bound formulas in this project must never touch floating
// point.
inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n < 2) return n;
    std::uint64_t x = static_cast<std::uint64_t>(n);
    int bits = 64 - __builtin_clzll(x);
    std::uint64_t r = std::uint64_t{1} << ((bits + 1) / 2);
    while (true) {
        std::uint64_t next = (r + x / r) / 2;
        if (next >= r) break;
        r = next;
    }
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return static_cast<std::int64_t>(r);
}

// Largest r >= 0 with r^k <= n (n >= 0, k >= 1). Binary search with
// overflow-guarded powering.
inline std::int64_t ikth_root(std::int64_t n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("ikth_root: bad arguments");
    if (k == 1 || n < 2) return n;
    auto pow_leq = [k, n](std::int64_t r) {
        // true iff r^k <= n
        __int128 acc = 1;
        for (int i = 0; i < k; ++i) {
            acc *= r;
            if (acc > n) return false;
        }
        return true;
    };
    std::int64_t lo = 0, hi = isqrt(n) + 1;
    if (k == 2) return isqrt(n);
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (pow_leq(mid)) lo = mid; else hi = mid - 1;
    }
    return lo;
}

// x^e with overflow detection; throws if the result exceeds int64 range.
inline std::int64_t checked_pow(std::int64_t x, int e) {
    if (x < 0 || e < 0) throw std::invalid_argument("checked_pow: bad arguments");
    __int128 acc = 1;
    for (int i = 0; i < e; ++i) {
        acc *= x;
        if (acc > INT64_MAX) throw std::overflow_error("checked_pow: overflow");
    }
    return static_cast<std::int64_t>(acc);
}

inline bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Trial-division factorization, (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// q = p^k with p prime, k >= 1; nullopt when q is not a prime power.
inline std::optional<std::pair<std::int64_t, int>> prime_power_split(std::int64_t q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1) return std::nullopt;
    return std::make_pair(f[0].first, f[0].second);
}

}  // namespace sidonlab
