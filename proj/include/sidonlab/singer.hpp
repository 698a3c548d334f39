#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidonlab/ff.hpp"
#include "sidonlab/intmath.hpp"

namespace sidonlab::singer {

using std::int64_t;
using ff::FFElement;
using ff::Field;
using ff::FieldPtr;

namespace detail {

// Kernel basis of a GF(p)-linear map on the field, given column-wise images
// of the power basis. Row-reduced over GF(p); basis vectors come out in the
// canonical free-column order.
inline std::vector<std::vector<int64_t>> null_space_mod_p(int64_t p,
                                                          std::vector<std::vector<int64_t>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(r)]);
        int64_t inv = ff::detail::mod_inverse(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], p);
        for (int j = c; j < cols; ++j)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv) % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            int64_t f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) {
                auto& v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                v = ((v - f * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) % p + p) % p;
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<int64_t>> basis;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<int64_t> v(static_cast<std::size_t>(cols), 0);
        v[static_cast<std::size_t>(c)] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) {
            int pc = pivot_col[static_cast<std::size_t>(i)];
            int64_t coeff = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            v[static_cast<std::size_t>(pc)] = ((-coeff) % p + p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// All GF(p)-combinations of the basis vectors, as field elements sorted by
// encoding (zero included).
inline std::vector<FFElement> span_elements(const FieldPtr& field,
                                            const std::vector<std::vector<int64_t>>& basis) {
    int64_t p = field->p();
    int dim = static_cast<int>(basis.size());
    int64_t count = checked_pow(p, dim);
    std::vector<FFElement> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int64_t> acc(static_cast<std::size_t>(field->degree()), 0);
    for (int64_t idx = 0; idx < count; ++idx) {
        std::fill(acc.begin(), acc.end(), 0);
        int64_t v = idx;
        for (int b = 0; b < dim; ++b) {
            int64_t c = v % p;
            v /= p;
            if (c == 0) continue;
            for (std::size_t i = 0; i < acc.size(); ++i)
                acc[i] = (acc[i] + c * basis[static_cast<std::size_t>(b)][i]) % p;
        }
        out.push_back(field->from_coeffs(acc));
    }
    std::sort(out.begin(), out.end(),
              [](const FFElement& a, const FFElement& b) { return a.encoding() < b.encoding(); });
    return out;
}

// Matrix (columns = images of the power basis) of a GF(p)-linear map.
template <typename MapFn>
inline std::vector<std::vector<int64_t>> linear_map_matrix(const FieldPtr& field, MapFn&& fn) {
    int d = field->degree();
    std::vector<std::vector<int64_t>> m(static_cast<std::size_t>(d),
                                        std::vector<int64_t>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) {
        std::vector<int64_t> e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(i)] = 1;
        FFElement img = fn(field->from_coeffs(std::move(e)));
        for (int r = 0; r < d; ++r)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] =
                img.coeffs()[static_cast<std::size_t>(r)];
    }
    return m;
}

}  // namespace detail

// The embedded subfield GF(q) as the kernel of x -> x^q - x, sorted by
// encoding (zero first).
inline std::vector<FFElement> subfield_elements(const FieldPtr& field) {
    if (field->subfield_exponent() < 1)
        throw std::invalid_argument("subfield_elements: field has no designated subfield");
    int64_t q = field->subfield_order();
    auto m = detail::linear_map_matrix(field, [&](FFElement a) { return a.pow(q) - a; });
    auto basis = detail::null_space_mod_p(field->p(), m);
    auto elems = detail::span_elements(field, basis);
    if (static_cast<int64_t>(elems.size()) != q)
        throw std::logic_error("subfield_elements: subfield has wrong size");
    return elems;
}

// The q^2 - 1 nonzero elements of ker(Tr), in encoding order. The trace is
// GF(p)-linear, so the kernel is the null space of its matrix.
inline std::vector<FFElement> trace_kernel_nonzero(const FieldPtr& field) {
    if (!field->is_singer())
        throw std::invalid_argument("trace_kernel_nonzero: field is not a degree-3 extension of its subfield");
    auto m = detail::linear_map_matrix(field, [](const FFElement& a) { return ff::rel_trace(a); });
    auto basis = detail::null_space_mod_p(field->p(), m);
    auto elems = detail::span_elements(field, basis);
    int64_t q = field->subfield_order();
    if (static_cast<int64_t>(elems.size()) != q * q)
        throw std::logic_error("trace_kernel_nonzero: kernel has wrong size");
    std::vector<FFElement> out;
    out.reserve(elems.size() - 1);
    for (auto& e : elems)
        if (!e.is_zero()) out.push_back(std::move(e));
    return out;
}

// A Singer perfect difference set: q + 1 residues modulo q^2 + q + 1,
// with construction provenance.
struct SingerSet {
    int64_t p = 0;
    int k = 0;
    int64_t q = 0;
    int64_t modulus = 0;  // M = q^2 + q + 1
    std::vector<int64_t> residues;
    int64_t generator_encoding = 0;
    std::vector<int64_t> field_modulus_coeffs;
};

struct PdsReport {
    bool ok = false;
    int64_t first_bad_residue = -1;  // smallest residue in [1, M) with count != 1
    int64_t count = 0;               // its representation count
    std::string message;
};

// lambda = 1 check: every nonzero residue mod M must arise as exactly one
// ordered difference of distinct set elements.
inline PdsReport verify_perfect_difference_set(const std::vector<int64_t>& residues, int64_t m) {
    PdsReport rep;
    if (m < 1) {
        rep.message = "modulus must be positive";
        return rep;
    }
    std::vector<int64_t> seen;
    for (int64_t r : residues) {
        if (r < 0 || r >= m) {
            rep.message = "residue out of range";
            return rep;
        }
    }
    seen = residues;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        rep.message = "residues not distinct";
        return rep;
    }
    std::vector<int64_t> cnt(static_cast<std::size_t>(m), 0);
    for (int64_t a : residues)
        for (int64_t b : residues) {
            if (a == b) continue;
            cnt[static_cast<std::size_t>(((a - b) % m + m) % m)]++;
        }
    for (int64_t r = 1; r < m; ++r) {
        if (cnt[static_cast<std::size_t>(r)] != 1) {
            rep.first_bad_residue = r;
            rep.count = cnt[static_cast<std::size_t>(r)];
            rep.message = "residue " + std::to_string(r) + " has " +
                          std::to_string(rep.count) + " representations";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

inline constexpr int64_t kSingerQCap = 256;

// The Singer pipeline: canonical field and generator for GF(q^3)/GF(q),
// discrete logs of the nonzero trace-kernel elements reduced mod
// M = q^2 + q + 1. Each residue is certified to arise from exactly q - 1
// kernel elements (one scalar orbit) before the set is returned.
inline SingerSet build_singer_set(int64_t q) {
    auto split = prime_power_split(q);
    if (!split) throw std::invalid_argument("build_singer_set: q must be a prime power >= 2");
    if (q > kSingerQCap) throw std::invalid_argument("build_singer_set: q above supported cap");
    auto [p, k] = *split;

    FieldPtr field = Field::make_singer(p, k);
    FFElement g = ff::find_generator(field);
    auto kernel = trace_kernel_nonzero(field);

    int64_t M = q * q + q + 1;
    ff::DlogTable table(g, static_cast<int64_t>(kernel.size()));
    std::map<int64_t, int64_t> orbit_count;
    for (const auto& u : kernel)
        orbit_count[table.log(u) % M] += 1;

    SingerSet s;
    s.p = p;
    s.k = k;
    s.q = q;
    s.modulus = M;
    s.generator_encoding = g.encoding();
    s.field_modulus_coeffs = field->modulus().coeffs;
    for (auto& [residue, count] : orbit_count) {
        if (count != q - 1)
            throw std::logic_error("build_singer_set: scalar orbit of size != q - 1");
        s.residues.push_back(residue);
    }
    if (static_cast<int64_t>(s.residues.size()) != q + 1)
        throw std::logic_error("build_singer_set: expected q + 1 residues");
    return s;
}

// Projective-line representatives of the trace kernel: v1 + t*v2 over the
// subfield, plus v2 for the line at infinity. Pairwise non-proportional by
// construction; asserted anyway.
struct ProjectiveReps {
    FFElement v1, v2;
    std::vector<FFElement> reps;  // q affine lines (t ascending by encoding), then v2
};

inline ProjectiveReps projective_representatives(const FieldPtr& field) {
    auto kernel = trace_kernel_nonzero(field);
    int64_t q = field->subfield_order();
    const FFElement& v1 = kernel.front();
    FFElement v1_inv = v1.inverse();
    const FFElement* v2 = nullptr;
    for (const auto& u : kernel) {
        if (!ff::is_in_subfield(u * v1_inv, q)) { v2 = &u; break; }
    }
    if (!v2) throw std::logic_error("projective_representatives: kernel has no second direction");

    ProjectiveReps pr{v1, *v2, {}};
    for (const auto& t : subfield_elements(field))
        pr.reps.push_back(v1 + t * pr.v2);
    pr.reps.push_back(pr.v2);

    for (std::size_t i = 0; i < pr.reps.size(); ++i) {
        if (pr.reps[i].is_zero() || !ff::rel_trace(pr.reps[i]).is_zero())
            throw std::logic_error("projective_representatives: representative outside kernel");
        for (std::size_t j = i + 1; j < pr.reps.size(); ++j)
            if (ff::is_in_subfield(pr.reps[i] * pr.reps[j].inverse(), q))
                throw std::logic_error("projective_representatives: proportional representatives");
    }
    if (static_cast<int64_t>(pr.reps.size()) != q + 1)
        throw std::logic_error("projective_representatives: expected q + 1 representatives");
    return pr;
}

}  // namespace sidonlab::singer
