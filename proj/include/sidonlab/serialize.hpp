#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sidonlab/extremal.hpp"
#include "sidonlab/sidon.hpp"
#include "sidonlab/singer.hpp"
#include "sidonlab/transfer.hpp"

namespace sidonlab::io {

using nlohmann::json;  // std::map-backed: keys serialize sorted, so dumps are stable

inline json singer_to_json(const singer::SingerSet& s) {
    json j;
    j["kind"] = "singer";
    j["p"] = s.p;
    j["k"] = s.k;
    j["q"] = s.q;
    j["modulus"] = s.modulus;
    j["residues"] = s.residues;
    return j;
}

inline json cert_to_json(const SidonCert& c) {
    json j;
    j["kind"] = "sidon-cert";
    j["level"] = to_string(c.level);
    j["set"] = c.set;
    if (c.level == SidonLevel::modular) j["M"] = c.modulus;
    if (c.level == SidonLevel::interval) j["N"] = c.bound;
    j["verified"] = c.verified;
    if (c.violation) j["violation"] = *c.violation;
    if (c.out_of_range) j["out_of_range"] = *c.out_of_range;
    return j;
}

inline json transfer_to_json(const transfer::TransferResult& t) {
    json j;
    j["kind"] = "transfer";
    SidonCert src;
    src.level = SidonLevel::modular;
    src.set = t.source;
    src.modulus = t.modulus;
    src.verified = true;
    j["source"] = cert_to_json(src);
    j["offset"] = t.offset;
    j["N"] = t.window;
    j["image"] = t.image;
    j["full"] = t.full;
    return j;
}

inline json hresult_to_json(const extremal::HResult& r) {
    json j;
    j["kind"] = "hmax";
    j["N"] = r.n;
    j["h"] = r.h;
    j["witness"] = r.witness;
    return j;
}

struct VerifyResult {
    bool ok = false;
    std::string kind;
    std::string message;
};

namespace detail {

inline VerifyResult verify_singer_json(const json& j) {
    VerifyResult res;
    res.kind = "singer";
    std::int64_t p = j.at("p").get<std::int64_t>();
    std::int64_t k = j.at("k").get<std::int64_t>();
    std::int64_t q = j.at("q").get<std::int64_t>();
    std::int64_t m = j.at("modulus").get<std::int64_t>();
    auto residues = j.at("residues").get<std::vector<std::int64_t>>();

    if (!is_prime_i64(p)) { res.message = "p is not prime"; return res; }
    if (k < 1 || checked_pow(p, static_cast<int>(k)) != q) {
        res.message = "q != p^k";
        return res;
    }
    if (m != q * q + q + 1) { res.message = "modulus != q^2+q+1"; return res; }
    if (static_cast<std::int64_t>(residues.size()) != q + 1) {
        res.message = "expected q+1 residues, got " + std::to_string(residues.size());
        return res;
    }
    auto pds = singer::verify_perfect_difference_set(residues, m);
    if (!pds.ok) { res.message = "perfect-difference-set check failed: " + pds.message; return res; }
    IntSet set = make_int_set(residues);
    if (set.size() != residues.size()) { res.message = "residues not distinct"; return res; }
    if (!is_sidon_mod(m, set).verified) { res.message = "set is not Sidon mod M"; return res; }
    res.ok = true;
    return res;
}

inline SidonCert cert_from_json(const json& j) {
    SidonCert c;
    std::string level = j.at("level").get<std::string>();
    if (level == "integer") c.level = SidonLevel::integer;
    else if (level == "modular") c.level = SidonLevel::modular;
    else if (level == "interval") c.level = SidonLevel::interval;
    else throw std::invalid_argument("unknown sidon-cert level: " + level);
    c.set = j.at("set").get<std::vector<std::int64_t>>();
    if (c.level == SidonLevel::modular) c.modulus = j.at("M").get<std::int64_t>();
    if (c.level == SidonLevel::interval) c.bound = j.at("N").get<std::int64_t>();
    c.verified = j.at("verified").get<bool>();
    if (j.contains("violation")) {
        auto v = j.at("violation").get<std::vector<std::int64_t>>();
        if (v.size() != 4) throw std::invalid_argument("violation must have 4 entries");
        c.violation = std::array<std::int64_t, 4>{v[0], v[1], v[2], v[3]};
    }
    if (j.contains("out_of_range")) c.out_of_range = j.at("out_of_range").get<std::int64_t>();
    return c;
}

inline VerifyResult verify_sidon_cert_json(const json& j) {
    VerifyResult res;
    res.kind = "sidon-cert";
    SidonCert claimed = cert_from_json(j);
    SidonCert actual;
    switch (claimed.level) {
        case SidonLevel::integer: actual = is_sidon(claimed.set); break;
        case SidonLevel::modular: actual = is_sidon_mod(claimed.modulus, claimed.set); break;
        case SidonLevel::interval: actual = is_interval_sidon(claimed.bound, claimed.set); break;
    }
    if (claimed.verified != actual.verified) {
        res.message = std::string("verified flag is wrong: recomputation says ") +
                      (actual.verified ? "true" : "false");
        return res;
    }
    if (claimed.violation != actual.violation) { res.message = "violation record mismatch"; return res; }
    if (claimed.out_of_range != actual.out_of_range) { res.message = "out_of_range record mismatch"; return res; }
    res.ok = true;
    return res;
}

inline VerifyResult verify_transfer_json(const json& j) {
    VerifyResult res;
    res.kind = "transfer";
    SidonCert src = cert_from_json(j.at("source"));
    if (src.level != SidonLevel::modular) { res.message = "source must be a modular cert"; return res; }
    VerifyResult src_res = verify_sidon_cert_json(j.at("source"));
    if (!src_res.ok) { res.message = "source cert invalid: " + src_res.message; return res; }
    if (!src.verified) { res.message = "source cert is not a verified Sidon set"; return res; }
    std::int64_t offset = j.at("offset").get<std::int64_t>();
    std::int64_t n = j.at("N").get<std::int64_t>();
    auto image = j.at("image").get<std::vector<std::int64_t>>();
    bool full = j.at("full").get<bool>();
    transfer::TransferResult tr = transfer::window_restrict(src.set, src.modulus, offset, n);
    if (tr.image != image) { res.message = "image does not match the window restriction"; return res; }
    if (tr.full != full) { res.message = "full flag mismatch"; return res; }
    res.ok = true;
    return res;
}

}  // namespace detail

// Independent re-check of any certificate this library emits. Malformed
// input is reported as invalid, never thrown.
inline VerifyResult verify_certificate_text(const std::string& text) {
    VerifyResult res;
    try {
        json j = json::parse(text);
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "singer") return detail::verify_singer_json(j);
        if (kind == "sidon-cert") return detail::verify_sidon_cert_json(j);
        if (kind == "transfer") return detail::verify_transfer_json(j);
        res.kind = kind;
        res.message = "unsupported certificate kind";
        return res;
    } catch (const std::exception& e) {
        res.message = std::string("malformed certificate: ") + e.what();
        return res;
    }
}

inline constexpr const char* kBoundsCsvHeader = "N,h,lower,upper_pd,upper_johnson,partial_ok";

inline std::string bounds_csv_row(const extremal::BoundsRow& r) {
    std::ostringstream os;
    os << r.n << ',' << r.h << ',' << r.lower << ',' << r.upper_pd << ',';
    if (r.upper_johnson >= 0) os << r.upper_johnson;
    os << ',' << (r.partial_ok ? 1 : 0);
    return os.str();
}

}  // namespace sidonlab::io
