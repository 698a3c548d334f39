#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sidonlab/intmath.hpp"

namespace sidonlab::ff {

using std::int64_t;

// Largest supported field order p^d. Chosen so baby-step/giant-step tables
// stay small; larger requests are rejected outright.
inline constexpr int64_t kOrderCap = int64_t{1} << 24;

// A polynomial over GF(p), coefficients lowest degree first and reduced
// mod p. The zero polynomial has an empty coefficient vector.
struct PrimePoly {
    int64_t p = 0;
    std::vector<int64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    // Total order used for canonical choices: sum coeffs[i] * p^i.
    int64_t encoding() const {
        int64_t e = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) e = e * p + coeffs[i];
        return e;
    }

    bool operator==(const PrimePoly& o) const { return p == o.p && coeffs == o.coeffs; }
};

namespace detail {

inline int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        int64_t qt = r / new_r;
        std::swap(t -= qt * new_t, new_t);
        std::swap(r -= qt * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

using Poly = std::vector<int64_t>;  // lowest degree first, empty = zero

inline void poly_trim(Poly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline Poly poly_mul(int64_t p, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(out);
    return out;
}

inline Poly poly_mod(int64_t p, Poly a, const Poly& f) {
    if (f.empty()) throw std::invalid_argument("poly_mod: division by zero polynomial");
    poly_trim(a);
    int64_t lead_inv = mod_inverse(f.back(), p);
    while (a.size() >= f.size()) {
        int64_t c = (a.back() * lead_inv) % p;
        std::size_t shift = a.size() - f.size();
        if (c != 0)
            for (std::size_t j = 0; j < f.size(); ++j)
                a[shift + j] = ((a[shift + j] - c * f[j]) % p + p) % p;
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

inline Poly poly_gcd(int64_t p, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        int64_t inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

inline Poly poly_powmod(int64_t p, Poly base, int64_t e, const Poly& f) {
    Poly result{1};
    base = poly_mod(p, std::move(base), f);
    while (e > 0) {
        if (e & 1) result = poly_mod(p, poly_mul(p, result, base), f);
        base = poly_mod(p, poly_mul(p, base, base), f);
        e >>= 1;
    }
    return result;
}

}  // namespace detail

// Irreducibility of a monic polynomial over GF(p). Small inputs use an
// exhaustive divisor scan; larger ones the x^(p^d) = x / gcd criterion.
inline bool is_irreducible(const PrimePoly& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (f.coeffs.back() != 1) throw std::invalid_argument("is_irreducible: modulus must be monic");
    if (d == 1) return true;
    int64_t p = f.p;
    int64_t order = checked_pow(p, d);

    if (d <= 4 && order <= (int64_t{1} << 20)) {
        // Divisor scan over all monic polynomials of degree <= d/2.
        for (int e = 1; 2 * e <= d; ++e) {
            int64_t count = checked_pow(p, e);
            for (int64_t enc = 0; enc < count; ++enc) {
                detail::Poly g(static_cast<std::size_t>(e) + 1, 0);
                int64_t v = enc;
                for (int i = 0; i < e; ++i) { g[static_cast<std::size_t>(i)] = v % p; v /= p; }
                g[static_cast<std::size_t>(e)] = 1;
                if (detail::poly_mod(p, f.coeffs, g).empty()) return false;
            }
        }
        return true;
    }

    detail::Poly x{0, 1};
    detail::Poly xq = detail::poly_powmod(p, x, order, f.coeffs);
    detail::Poly diff = xq;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    detail::poly_trim(diff);
    if (!diff.empty()) return false;
    for (auto [ell, mult] : factorize(d)) {
        (void)mult;
        int64_t sub_order = checked_pow(p, d / static_cast<int>(ell));
        detail::Poly xe = detail::poly_powmod(p, x, sub_order, f.coeffs);
        detail::Poly g = xe;
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = ((g[1] - 1) % p + p) % p;
        detail::poly_trim(g);
        if (detail::poly_gcd(p, g, f.coeffs).size() > 1) return false;
    }
    return true;
}

// The monic irreducible of degree d over GF(p) whose non-leading coefficient
// tuple has the smallest encoding. Scanning in encoding order makes every
// downstream construction reproducible.
inline PrimePoly find_irreducible(int64_t p, int d) {
    if (!is_prime_i64(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (d < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    int64_t order = checked_pow(p, d);
    if (order > kOrderCap) throw std::invalid_argument("find_irreducible: field order above cap");
    for (int64_t enc = 0; enc < order; ++enc) {
        PrimePoly f;
        f.p = p;
        f.coeffs.assign(static_cast<std::size_t>(d) + 1, 0);
        int64_t v = enc;
        for (int i = 0; i < d; ++i) { f.coeffs[static_cast<std::size_t>(i)] = v % p; v /= p; }
        f.coeffs[static_cast<std::size_t>(d)] = 1;
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class FFElement;

// GF(p^d) in polynomial basis modulo a fixed monic irreducible. Immutable
// after construction; share via FieldPtr.
class Field : public std::enable_shared_from_this<Field> {
  public:
    Field(PrimePoly modulus, int subfield_exp)
        : p_(modulus.p), d_(modulus.degree()), k_(subfield_exp), modulus_(std::move(modulus)) {
        if (d_ < 1) throw std::invalid_argument("Field: modulus degree must be >= 1");
        if (!is_prime_i64(p_)) throw std::invalid_argument("Field: p must be prime");
        if (modulus_.coeffs.back() != 1) throw std::invalid_argument("Field: modulus must be monic");
        for (int64_t c : modulus_.coeffs)
            if (c < 0 || c >= p_) throw std::invalid_argument("Field: modulus coefficients not reduced");
        order_ = checked_pow(p_, d_);
        if (order_ > kOrderCap) throw std::invalid_argument("Field: order above supported cap");
        if (!is_irreducible(modulus_)) throw std::invalid_argument("Field: modulus is reducible");
        if (k_ < 0 || (k_ > 0 && d_ % k_ != 0))
            throw std::invalid_argument("Field: subfield exponent must divide degree");
        q_ = k_ > 0 ? checked_pow(p_, k_) : 0;
    }

    // Canonical field with the smallest-encoding irreducible modulus.
    static FieldPtr make(int64_t p, int d) {
        return std::make_shared<Field>(find_irreducible(p, d), 0);
    }

    // GF(q^3) over GF(q) with q = p^k: degree 3k over the prime field.
    static FieldPtr make_singer(int64_t p, int k) {
        if (k < 1) throw std::invalid_argument("make_singer: k must be >= 1");
        return std::make_shared<Field>(find_irreducible(p, 3 * k), k);
    }

    int64_t p() const { return p_; }
    int degree() const { return d_; }
    int64_t order() const { return order_; }
    int subfield_exponent() const { return k_; }
    int64_t subfield_order() const { return q_; }
    bool is_singer() const { return k_ > 0 && d_ == 3 * k_; }
    const PrimePoly& modulus() const { return modulus_; }

    bool same_field(const Field& o) const {
        return this == &o || (p_ == o.p_ && modulus_.coeffs == o.modulus_.coeffs);
    }

    FFElement zero() const;
    FFElement one() const;
    FFElement gen_x() const;  // the class of x
    FFElement from_encoding(int64_t e) const;
    FFElement from_coeffs(std::vector<int64_t> c) const;

    // Schoolbook product of two coefficient vectors reduced by the monic
    // modulus; the workhorse behind operator*.
    std::vector<int64_t> reduce_product(const std::vector<int64_t>& a,
                                        const std::vector<int64_t>& b) const {
        std::vector<int64_t> t(2 * static_cast<std::size_t>(d_) - 1, 0);
        for (int i = 0; i < d_; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < d_; ++j)
                t[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
        for (auto& v : t) v %= p_;
        for (int i = 2 * d_ - 2; i >= d_; --i) {
            int64_t c = t[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            for (int j = 0; j < d_; ++j) {
                std::size_t idx = static_cast<std::size_t>(i - d_ + j);
                t[idx] = ((t[idx] - c * modulus_.coeffs[static_cast<std::size_t>(j)]) % p_ + p_) % p_;
            }
            t[static_cast<std::size_t>(i)] = 0;
        }
        t.resize(static_cast<std::size_t>(d_));
        for (auto& v : t) v = (v % p_ + p_) % p_;
        return t;
    }

  private:
    int64_t p_, order_, q_;
    int d_, k_;
    PrimePoly modulus_;
};

// Element of a Field: coefficient vector of length d, entries in [0, p).
class FFElement {
  public:
    FFElement() = default;
    FFElement(FieldPtr f, std::vector<int64_t> c) : f_(std::move(f)), c_(std::move(c)) {
        if (!f_) throw std::invalid_argument("FFElement: null field");
        if (static_cast<int>(c_.size()) != f_->degree())
            throw std::invalid_argument("FFElement: coefficient length mismatch");
        for (auto& v : c_) {
            v %= f_->p();
            if (v < 0) v += f_->p();
        }
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (int64_t v : c_) if (v != 0) return false;
        return true;
    }

    int64_t encoding() const {
        int64_t e = 0;
        for (std::size_t i = c_.size(); i-- > 0;) e = e * f_->p() + c_[i];
        return e;
    }

    friend bool operator==(const FFElement& a, const FFElement& b) {
        a.check_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FFElement& a, const FFElement& b) { return !(a == b); }

    friend FFElement operator+(const FFElement& a, const FFElement& b) {
        a.check_same(b);
        std::vector<int64_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.c_[i] + b.c_[i]) % a.f_->p();
        return FFElement(a.f_, std::move(c), RawTag{});
    }

    friend FFElement operator-(const FFElement& a, const FFElement& b) {
        a.check_same(b);
        std::vector<int64_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = ((a.c_[i] - b.c_[i]) % a.f_->p() + a.f_->p()) % a.f_->p();
        return FFElement(a.f_, std::move(c), RawTag{});
    }

    friend FFElement operator*(const FFElement& a, const FFElement& b) {
        a.check_same(b);
        return FFElement(a.f_, a.f_->reduce_product(a.c_, b.c_), RawTag{});
    }

    FFElement inverse() const {
        if (is_zero()) throw std::invalid_argument("FFElement: inverse of zero");
        // Extended Euclid on (modulus, this).
        int64_t p = f_->p();
        detail::Poly r0 = f_->modulus().coeffs, r1 = c_;
        detail::poly_trim(r1);
        detail::Poly s0{}, s1{1};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            detail::Poly q;
            detail::Poly rem = r0;
            int64_t lead_inv = detail::mod_inverse(r1.back(), p);
            q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                int64_t c = (rem.back() * lead_inv) % p;
                std::size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (std::size_t j = 0; j < r1.size(); ++j)
                    rem[shift + j] = ((rem[shift + j] - c * r1[j]) % p + p) % p;
                detail::poly_trim(rem);
            }
            detail::Poly s2 = s0;  // s2 = s0 - q*s1
            detail::Poly qs1 = detail::poly_mul(p, q, s1);
            s2.resize(std::max(s2.size(), qs1.size()), 0);
            for (std::size_t i = 0; i < qs1.size(); ++i)
                s2[i] = ((s2[i] - qs1[i]) % p + p) % p;
            detail::poly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.size() != 1) throw std::logic_error("FFElement: gcd with irreducible modulus not constant");
        int64_t scale = detail::mod_inverse(r0[0], p);
        std::vector<int64_t> out(static_cast<std::size_t>(f_->degree()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) out[i] = (s0[i] * scale) % p;
        return FFElement(f_, std::move(out), RawTag{});
    }

    // a^e; the exponent is reduced mod (order - 1) for nonzero bases, so
    // negative exponents mean inverse powers.
    FFElement pow(int64_t e) const {
        int64_t n = f_->order() - 1;
        if (is_zero()) {
            if (e == 0) return one_like();
            if (e < 0) throw std::invalid_argument("FFElement: negative power of zero");
            return *this;
        }
        e %= n;
        if (e < 0) e += n;
        FFElement result = one_like();
        FFElement base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // a^(p^e), by repeated p-th powering.
    FFElement frobenius(int e) const {
        if (e < 0) throw std::invalid_argument("FFElement: frobenius exponent must be >= 0");
        FFElement r = *this;
        for (int i = 0; i < e; ++i) r = r.pow(f_->p());
        return r;
    }

  private:
    struct RawTag {};
    FFElement(FieldPtr f, std::vector<int64_t> c, RawTag) : f_(std::move(f)), c_(std::move(c)) {}

    FFElement one_like() const {
        std::vector<int64_t> c(static_cast<std::size_t>(f_->degree()), 0);
        c[0] = 1;
        return FFElement(f_, std::move(c), RawTag{});
    }

    void check_same(const FFElement& o) const {
        if (!f_ || !o.f_) throw std::invalid_argument("FFElement: uninitialized element");
        if (!f_->same_field(*o.f_))
            throw std::invalid_argument("FFElement: elements from different field specs");
    }

    friend class Field;
    FieldPtr f_;
    std::vector<int64_t> c_;
};

inline FFElement Field::zero() const {
    return FFElement(shared_from_this(), std::vector<int64_t>(static_cast<std::size_t>(d_), 0));
}

inline FFElement Field::one() const {
    std::vector<int64_t> c(static_cast<std::size_t>(d_), 0);
    c[0] = 1;
    return FFElement(shared_from_this(), std::move(c));
}

inline FFElement Field::gen_x() const {
    if (d_ < 2) throw std::invalid_argument("Field: x is not a residue in a prime field");
    std::vector<int64_t> c(static_cast<std::size_t>(d_), 0);
    c[1] = 1;
    return FFElement(shared_from_this(), std::move(c));
}

inline FFElement Field::from_encoding(int64_t e) const {
    if (e < 0 || e >= order_) throw std::invalid_argument("Field: encoding out of range");
    std::vector<int64_t> c(static_cast<std::size_t>(d_), 0);
    for (int i = 0; i < d_; ++i) { c[static_cast<std::size_t>(i)] = e % p_; e /= p_; }
    return FFElement(shared_from_this(), std::move(c));
}

inline FFElement Field::from_coeffs(std::vector<int64_t> c) const {
    c.resize(static_cast<std::size_t>(d_), 0);
    return FFElement(shared_from_this(), std::move(c));
}

// Relative trace to the designated subfield GF(q): a + a^q + a^(q^2).
// Requires a Singer-shaped field (d = 3k).
inline FFElement rel_trace(const FFElement& a) {
    const Field& f = *a.field();
    if (!f.is_singer())
        throw std::invalid_argument("rel_trace: field has no designated degree-3 subfield structure");
    int k = f.subfield_exponent();
    FFElement aq = a.frobenius(k);
    FFElement aq2 = aq.frobenius(k);
    return a + aq + aq2;
}

// True iff a lies in the subfield of order q, i.e. a^q = a.
inline bool is_in_subfield(const FFElement& a, int64_t q) {
    const Field& f = *a.field();
    int64_t v = q;
    int j = 0;
    while (v > 1 && v % f.p() == 0) { v /= f.p(); ++j; }
    if (v != 1 || j < 1 || f.degree() % j != 0)
        throw std::invalid_argument("is_in_subfield: q is not p^k with k dividing d");
    return a.pow(q) == a;
}

// Smallest-encoding multiplicative generator. Order is certified by checking
// g^(n/l) != 1 for every prime l dividing n = p^d - 1.
inline FFElement find_generator(const FieldPtr& field) {
    int64_t n = field->order() - 1;
    auto factors = factorize(n);
    for (int64_t enc = 1; enc < field->order(); ++enc) {
        FFElement g = field->from_encoding(enc);
        bool ok = true;
        for (auto [ell, mult] : factors) {
            (void)mult;
            if (g.pow(n / ell) == field->one()) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_generator: multiplicative group not cyclic?");  // unreachable
}

// Baby-step/giant-step table for discrete logs base g. Built once, then
// read-only; the expected-query hint widens the baby table so that batched
// lookups (the Singer pipeline does q^2 of them) stay cheap.
class DlogTable {
  public:
    explicit DlogTable(FFElement g, int64_t expected_queries = 1)
        : g_(std::move(g)), n_(g_.field()->order() - 1) {
        if (g_.is_zero()) throw std::invalid_argument("DlogTable: generator must be nonzero");
        int64_t m = isqrt(n_) + 1;
        if (expected_queries > 1) {
            int64_t balanced = isqrt(n_ * std::min<int64_t>(expected_queries, n_) / 2) + 1;
            m = std::max(m, balanced);
        }
        m = std::min<int64_t>({m, n_, int64_t{1} << 21});
        m_ = m;
        baby_.reserve(static_cast<std::size_t>(m_));
        FFElement v = g_.field()->one();
        for (int64_t j = 0; j < m_; ++j) {
            baby_.emplace(v.encoding(), j);
            v = v * g_;
        }
        giant_ = g_.pow(m_).inverse();
    }

    int64_t order() const { return n_; }

    int64_t log(const FFElement& a) const {
        if (a.is_zero()) throw std::invalid_argument("DlogTable: log of zero");
        if (!a.field()->same_field(*g_.field()))
            throw std::invalid_argument("DlogTable: element from different field spec");
        FFElement v = a;
        for (int64_t i = 0; i * m_ <= n_; ++i) {
            auto it = baby_.find(v.encoding());
            if (it != baby_.end()) {
                int64_t e = i * m_ + it->second;
                if (e >= n_) e -= n_;
                return e;
            }
            v = v * giant_;
        }
        throw std::logic_error("DlogTable: element not in the cyclic group of g");
    }

  private:
    FFElement g_;
    int64_t n_, m_ = 0;
    FFElement giant_;
    std::unordered_map<int64_t, int64_t> baby_;
};

// One-shot discrete log: the unique e in [0, p^d - 1) with g^e = a.
inline int64_t discrete_log(const FFElement& g, const FFElement& a) {
    return DlogTable(g).log(a);
}

}  // namespace sidonlab::ff
