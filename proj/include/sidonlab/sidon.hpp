#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sidonlab {

using std::int64_t;

// Strictly increasing, duplicate-free integer list.
using IntSet = std::vector<int64_t>;

// Inputs are bounded so every pairwise sum and difference fits in int64.
inline constexpr int64_t kMaxMagnitude = int64_t{1} << 62;

inline IntSet make_int_set(std::vector<int64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline void require_int_set(const IntSet& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > kMaxMagnitude || a[i] < -kMaxMagnitude)
            throw std::invalid_argument("IntSet: element magnitude out of supported range");
        if (i > 0 && a[i] <= a[i - 1])
            throw std::invalid_argument("IntSet: elements must be strictly increasing");
    }
}

enum class SidonLevel { integer, modular, interval };

inline const char* to_string(SidonLevel l) {
    switch (l) {
        case SidonLevel::integer: return "integer";
        case SidonLevel::modular: return "modular";
        case SidonLevel::interval: return "interval";
    }
    return "?";
}

// A checked Sidon claim. When a sum collision exists, `violation` holds the
// first one in lexicographic pair-scan order as (c, d, a, b) with c+d = a+b
// and {c,d} != {a,b}. Interval certificates may instead fail containment,
// recorded in `out_of_range`.
struct SidonCert {
    SidonLevel level = SidonLevel::integer;
    IntSet set;
    int64_t modulus = 0;  // modular level
    int64_t bound = 0;    // interval level
    bool verified = false;
    std::optional<std::array<int64_t, 4>> violation;
    std::optional<int64_t> out_of_range;
};

namespace detail {

// Shared collision scan: sums a_i + a_j (i <= j) in lexicographic (i, j)
// order, optionally reduced mod m (m = 0 means plain integers).
inline std::optional<std::array<int64_t, 4>> first_sum_collision(const IntSet& a, int64_t m) {
    std::unordered_map<int64_t, std::pair<int64_t, int64_t>> seen;
    seen.reserve(a.size() * (a.size() + 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) {
            int64_t s = a[i] + a[j];
            if (m > 0) s = ((s % m) + m) % m;
            auto [it, inserted] = seen.emplace(s, std::make_pair(a[i], a[j]));
            if (!inserted)
                return std::array<int64_t, 4>{it->second.first, it->second.second, a[i], a[j]};
        }
    return std::nullopt;
}

}  // namespace detail

// Integer-level Sidon check: all sums a + b with a <= b distinct.
inline SidonCert is_sidon(const IntSet& a) {
    require_int_set(a);
    SidonCert cert;
    cert.level = SidonLevel::integer;
    cert.set = a;
    cert.violation = detail::first_sum_collision(a, 0);
    cert.verified = !cert.violation.has_value();
    return cert;
}

// Sidon modulo M: sums compared as residues mod M.
inline SidonCert is_sidon_mod(int64_t m, const IntSet& a) {
    if (m < 1) throw std::invalid_argument("is_sidon_mod: modulus must be >= 1");
    require_int_set(a);
    SidonCert cert;
    cert.level = SidonLevel::modular;
    cert.set = a;
    cert.modulus = m;
    cert.violation = detail::first_sum_collision(a, m);
    cert.verified = !cert.violation.has_value();
    return cert;
}

// Sidon and contained in {1, ..., N}.
inline SidonCert is_interval_sidon(int64_t n, const IntSet& a) {
    if (n < 1) throw std::invalid_argument("is_interval_sidon: N must be >= 1");
    require_int_set(a);
    SidonCert cert;
    cert.level = SidonLevel::interval;
    cert.set = a;
    cert.bound = n;
    for (int64_t v : a)
        if (v < 1 || v > n) { cert.out_of_range = v; break; }
    if (!cert.out_of_range) cert.violation = detail::first_sum_collision(a, 0);
    cert.verified = !cert.out_of_range && !cert.violation;
    return cert;
}

// No-wraparound transfer: an interval Sidon set in {1..N} is Sidon mod M
// whenever M >= 2N - 1. Preconditions checked, conclusion re-verified.
inline SidonCert no_wraparound(const IntSet& a, int64_t n, int64_t m) {
    SidonCert interval = is_interval_sidon(n, a);
    if (!interval.verified)
        throw std::invalid_argument("no_wraparound: input is not interval Sidon in {1..N}");
    if (m < 2 * n - 1)
        throw std::invalid_argument("no_wraparound: modulus must satisfy M >= 2N - 1");
    SidonCert cert = is_sidon_mod(m, a);
    if (!cert.verified)
        throw std::logic_error("no_wraparound: modular re-verification failed (internal bug)");
    return cert;
}

inline IntSet sumset(const IntSet& a) {
    require_int_set(a);
    std::vector<int64_t> out;
    out.reserve(a.size() * (a.size() + 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) out.push_back(a[i] + a[j]);
    return make_int_set(std::move(out));
}

inline IntSet diffset(const IntSet& a) {
    require_int_set(a);
    std::vector<int64_t> out;
    out.reserve(a.size() * a.size());
    for (int64_t x : a)
        for (int64_t y : a) out.push_back(x - y);
    return make_int_set(std::move(out));
}

// r_A(n) over ordered pairs: r(n) = #{(a, b) in A^2 : a + b = n}.
struct RepProfile {
    IntSet set;
    std::map<int64_t, int64_t> pairs;
};

inline RepProfile rep_profile(const IntSet& a) {
    require_int_set(a);
    RepProfile rp;
    rp.set = a;
    for (int64_t x : a)
        for (int64_t y : a) rp.pairs[x + y] += 1;
    return rp;
}

// #{(a,b,c,d) in A^4 : a + b = c + d} = sum of r(n)^2.
inline int64_t additive_energy(const IntSet& a) {
    RepProfile rp = rep_profile(a);
    int64_t e = 0;
    for (auto& [n, r] : rp.pairs) e += r * r;
    return e;
}

struct IdentityCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    int64_t lhs = 0;
    int64_t rhs = 0;
};

struct IdentityReport {
    int64_t m = 0;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
};

// The exact cardinality and representation-function identities that hold for
// every Sidon set. Throws on non-Sidon input; checks that need nonemptiness
// (or size >= 3) are marked inapplicable for smaller sets.
inline IdentityReport check_identities(const IntSet& a) {
    if (!is_sidon(a).verified)
        throw std::invalid_argument("check_identities: input set is not Sidon");
    int64_t m = static_cast<int64_t>(a.size());
    IdentityReport rep;
    rep.m = m;

    int64_t card_add = static_cast<int64_t>(sumset(a).size());
    int64_t card_sub = static_cast<int64_t>(diffset(a).size());
    RepProfile rp = rep_profile(a);
    int64_t sum_r = 0, sum_r_sq = 0, deficiency = 0, max_r = 0;
    for (auto& [n, r] : rp.pairs) {
        sum_r += r;
        sum_r_sq += r * r;
        deficiency += 2 - r;
        max_r = std::max(max_r, r);
    }

    enum class Cmp { eq, le, ge, gt };
    auto add = [&rep](std::string name, bool applicable, int64_t lhs, int64_t rhs, Cmp cmp) {
        IdentityCheck c;
        c.name = std::move(name);
        c.applicable = applicable;
        c.lhs = lhs;
        c.rhs = rhs;
        switch (cmp) {
            case Cmp::eq: c.pass = lhs == rhs; break;
            case Cmp::le: c.pass = lhs <= rhs; break;
            case Cmp::ge: c.pass = lhs >= rhs; break;
            case Cmp::gt: c.pass = lhs > rhs; break;
        }
        if (!applicable) c.pass = true;
        rep.checks.push_back(std::move(c));
    };

    add("card_add", true, card_add, m * (m + 1) / 2, Cmp::eq);
    add("card_sub", m >= 1, card_sub, m * m - m + 1, Cmp::eq);
    add("energy", true, additive_energy(a), 2 * m * m - m, Cmp::eq);
    add("rep_le_two", true, max_r, 2, Cmp::le);
    add("sum_r", true, sum_r, m * m, Cmp::eq);
    add("sum_r_sq", true, sum_r_sq, 2 * m * m - m, Cmp::eq);
    add("deficiency", true, deficiency, m, Cmp::eq);
    add("card_sub_ge_add", m >= 1, card_sub, card_add, Cmp::ge);
    add("card_sub_gt_add", m >= 3, card_sub, card_add, Cmp::gt);
    return rep;
}

// (is Sidon, has maximal sumset cardinality): the two are equivalent, and a
// disagreement is an internal bug.
inline std::pair<bool, bool> sidon_iff_card_add(const IntSet& a) {
    require_int_set(a);
    bool sidon = is_sidon(a).verified;
    int64_t m = static_cast<int64_t>(a.size());
    bool max_card = static_cast<int64_t>(sumset(a).size()) == m * (m + 1) / 2;
    if (sidon != max_card)
        throw std::logic_error("sidon_iff_card_add: characterizations disagree (internal bug)");
    return {sidon, max_card};
}

}  // namespace sidonlab
