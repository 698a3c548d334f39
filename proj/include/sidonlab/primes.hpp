#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidonlab/intmath.hpp"

namespace sidonlab::primes {

// Sieve of Eratosthenes with lazy doubling extension. Extension takes an
// exclusive lock; queries take a shared lock and are safe to run
// concurrently.
class PrimeTable {
  public:
    explicit PrimeTable(std::int64_t limit = kDefaultLimit) { rebuild(limit); }

    std::int64_t limit() const {
        std::shared_lock lk(mu_);
        return limit_;
    }

    bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        ensure(n);
        std::shared_lock lk(mu_);
        return composite_[static_cast<std::size_t>(n)] == 0;
    }

    // Smallest prime strictly greater than n.
    std::int64_t next_prime_above(std::int64_t n) {
        std::int64_t c = std::max<std::int64_t>(n, 1) + 1;
        while (true) {
            ensure(c);
            {
                std::shared_lock lk(mu_);
                for (; c <= limit_; ++c)
                    if (!composite_[static_cast<std::size_t>(c)]) return c;
            }
        }
    }

    // Largest prime in [lo, hi], or nullopt.
    std::optional<std::int64_t> largest_prime_in(std::int64_t lo, std::int64_t hi) {
        if (hi < 2 || hi < lo) return std::nullopt;
        ensure(hi);
        std::shared_lock lk(mu_);
        for (std::int64_t c = hi; c >= std::max<std::int64_t>(lo, 2); --c)
            if (!composite_[static_cast<std::size_t>(c)]) return c;
        return std::nullopt;
    }

    void ensure(std::int64_t n) {
        {
            std::shared_lock lk(mu_);
            if (n <= limit_) return;
        }
        std::unique_lock lk(mu_);
        if (n <= limit_) return;
        std::int64_t target = limit_;
        while (target < n) target *= 2;
        rebuild_locked(target);
    }

    // Snapshot I/O so repeated CLI runs can reuse a sieve. Best effort: any
    // mismatch or I/O failure just falls back to the in-memory sieve.
    bool save_snapshot(const std::string& path) const {
        std::shared_lock lk(mu_);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) return false;
        out << "sidonlab-sieve 1 " << limit_ << "\n";
        out.write(reinterpret_cast<const char*>(composite_.data()),
                  static_cast<std::streamsize>(composite_.size()));
        return static_cast<bool>(out);
    }

    bool load_snapshot(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) return false;
        std::string tag;
        int version = 0;
        std::int64_t lim = 0;
        in >> tag >> version >> lim;
        if (tag != "sidonlab-sieve" || version != 1 || lim < 2) return false;
        in.get();  // newline
        std::vector<std::uint8_t> data(static_cast<std::size_t>(lim) + 1);
        in.read(reinterpret_cast<char*>(data.data()),
                static_cast<std::streamsize>(data.size()));
        if (!in) return false;
        if (data[2] || data[3] || !data[4]) return false;  // sanity: 2,3 prime, 4 not
        std::unique_lock lk(mu_);
        if (lim <= limit_) return true;
        limit_ = lim;
        composite_ = std::move(data);
        return true;
    }

    static constexpr std::int64_t kDefaultLimit = 2'000'000;

  private:
    void rebuild(std::int64_t limit) {
        std::unique_lock lk(mu_);
        rebuild_locked(limit);
    }

    void rebuild_locked(std::int64_t limit) {
        limit_ = std::max<std::int64_t>(limit, 16);
        composite_.assign(static_cast<std::size_t>(limit_) + 1, 0);
        composite_[0] = composite_[1] = 1;
        for (std::int64_t i = 2; i * i <= limit_; ++i)
            if (!composite_[static_cast<std::size_t>(i)])
                for (std::int64_t j = i * i; j <= limit_; j += i)
                    composite_[static_cast<std::size_t>(j)] = 1;
    }

    mutable std::shared_mutex mu_;
    std::int64_t limit_ = 0;
    std::vector<std::uint8_t> composite_;
};

inline PrimeTable& shared_table() {
    static PrimeTable table;
    return table;
}

// Smallest prime p with n < p <= 2n. Bertrand's postulate guarantees one for
// every n >= 1.
inline std::int64_t bertrand_prime(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("bertrand_prime: n must be >= 1");
    PrimeTable& t = shared_table();
    t.ensure(2 * n);
    std::int64_t p = t.next_prime_above(n);
    if (p > 2 * n) throw std::logic_error("bertrand_prime: no prime in (n, 2n]");
    return p;
}

// Largest prime in (x - floor(x^(a/b)), x], or nullopt when that window holds
// none. The fractional power is evaluated exactly as floor((x^a)^(1/b)).
inline std::optional<std::int64_t> gap_prime(std::int64_t x, std::int64_t a, std::int64_t b) {
    if (x < 2) throw std::invalid_argument("gap_prime: x must be >= 2");
    if (a < 1 || b < 1 || a > b) throw std::invalid_argument("gap_prime: delta must be in (0, 1]");
    std::int64_t g = ikth_root(checked_pow(x, static_cast<int>(a)), static_cast<int>(b));
    return shared_table().largest_prime_in(x - g + 1, x);
}

}  // namespace sidonlab::primes
