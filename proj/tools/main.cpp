#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sidonlab/extremal.hpp"
#include "sidonlab/primes.hpp"
#include "sidonlab/serialize.hpp"
#include "sidonlab/sidon.hpp"
#include "sidonlab/singer.hpp"
#include "sidonlab/transfer.hpp"

namespace {

using namespace sidonlab;

std::string join(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

int run_singer(std::int64_t q, bool as_json) {
    singer::SingerSet s = singer::build_singer_set(q);
    auto pds = singer::verify_perfect_difference_set(s.residues, s.modulus);
    bool mod_ok = is_sidon_mod(s.modulus, s.residues).verified;
    if (as_json) {
        std::cout << io::singer_to_json(s).dump() << "\n";
    } else {
        std::cout << "q = " << s.q << " (p = " << s.p << ", k = " << s.k << ")\n";
        std::cout << "M = " << s.modulus << "\n";
        std::cout << "residues = " << join(s.residues) << "\n";
        std::cout << "perfect difference set: " << (pds.ok ? "pass" : "FAIL: " + pds.message) << "\n";
        std::cout << "sidon mod M: " << (mod_ok ? "pass" : "FAIL") << "\n";
    }
    return pds.ok && mod_ok ? 0 : 1;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    io::VerifyResult res = io::verify_certificate_text(ss.str());
    if (res.ok) {
        std::cout << "OK: " << res.kind << "\n";
        return 0;
    }
    std::cout << "INVALID" << (res.kind.empty() ? "" : " (" + res.kind + ")") << ": "
              << res.message << "\n";
    return 1;
}

int run_hmax(std::int64_t n, std::int64_t cap, int workers) {
    extremal::HResult r = extremal::h_exact(n, cap, workers);
    std::cout << "h(" << r.n << ") = " << r.h << ", witness = " << join(r.witness) << "\n";
    return 0;
}

int run_bounds(std::int64_t from, std::int64_t to, const std::string& csv_path) {
    auto results = extremal::h_range(from, to);
    std::ostringstream csv;
    csv << io::kBoundsCsvHeader << "\n";
    bool all_ok = true;
    for (const auto& r : results) {
        extremal::BoundsRow row = extremal::bounds_row_with_h(r.n, r.h);
        all_ok = all_ok && row.all_ok();
        csv << io::bounds_csv_row(row) << "\n";
    }
    std::cout << csv.str();
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::trunc);
        out << csv.str();
        if (!out) {
            std::cerr << "error: could not write " << csv_path << "\n";
            return 1;
        }
    }
    return all_ok ? 0 : 1;
}

int run_transfer(std::int64_t q, std::int64_t n) {
    singer::SingerSet s = singer::build_singer_set(q);
    if (n == 0) n = transfer::singer_threshold(q);
    transfer::TransferResult tr = transfer::full_transfer(s.residues, s.modulus, n);
    std::cout << io::transfer_to_json(tr).dump() << "\n";
    return 0;
}

int run_lower(std::int64_t n) {
    extremal::BertrandLower bl = extremal::bertrand_lower(n);
    std::cout << "N = " << bl.n << "\n";
    std::cout << "floor(sqrt(N)) = " << bl.sqrt_floor << "\n";
    if (bl.prime > 0)
        std::cout << "bertrand interval index = " << bl.half_index << ", prime p = " << bl.prime
                  << "\n";
    std::cout << "witness (size " << bl.witness.size() << ") = " << join(bl.witness) << "\n";
    std::cout << "lower bound = " << bl.bound << "\n";
    std::cout << bl.witness.size() << " > " << bl.bound << ": pass\n";
    return 0;
}

int run_identities(const std::string& spec) {
    std::vector<std::int64_t> vals;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        vals.push_back(std::stoll(item));
    }
    IntSet a = make_int_set(vals);
    std::cout << "set = " << join(a) << " (m = " << a.size() << ")\n";
    SidonCert cert = is_sidon(a);
    if (!cert.verified) {
        const auto& v = *cert.violation;
        std::cout << "not a Sidon set: " << v[0] << "+" << v[1] << " = " << v[2] << "+" << v[3]
                  << "\n";
        return 1;
    }
    IdentityReport rep = check_identities(a);
    for (const auto& c : rep.checks) {
        if (!c.applicable)
            std::cout << c.name << ": skipped\n";
        else
            std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (lhs = " << c.lhs
                      << ", rhs = " << c.rhs << ")\n";
    }
    std::cout << "all identities: " << (rep.all_pass() ? "pass" : "FAIL") << "\n";
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sidonlab: Singer difference sets, Sidon predicates, and h(N) bounds"};
    app.require_subcommand(1);

    auto* singer_cmd = app.add_subcommand("singer", "Build and verify a Singer set mod q^2+q+1");
    std::int64_t singer_q = 0;
    bool singer_json = false;
    singer_cmd->add_option("--q", singer_q, "prime power q")->required();
    singer_cmd->add_flag("--json", singer_json, "emit the JSON certificate");

    auto* verify_cmd = app.add_subcommand("verify", "Independently re-check a certificate file");
    std::string verify_file;
    verify_cmd->add_option("--file", verify_file, "certificate JSON file")
        ->required()
        ->check(CLI::ExistingFile);

    auto* hmax_cmd = app.add_subcommand("hmax", "Exact h(N) with lexicographically least witness");
    std::int64_t hmax_n = 0, hmax_cap = extremal::kDefaultCap;
    int hmax_workers = 1;
    hmax_cmd->add_option("--n", hmax_n, "interval bound N")->required();
    hmax_cmd->add_option("--cap", hmax_cap, "search cap on N");
    hmax_cmd->add_option("--workers", hmax_workers, "worker threads");

    auto* bounds_cmd = app.add_subcommand("bounds", "Bounds table for h(N) over a range");
    std::int64_t bounds_from = 0, bounds_to = 0;
    std::string bounds_csv;
    bounds_cmd->add_option("--from", bounds_from, "first N (>= 5)")->required();
    bounds_cmd->add_option("--to", bounds_to, "last N")->required();
    bounds_cmd->add_option("--csv", bounds_csv, "also write the table to this file");

    auto* transfer_cmd = app.add_subcommand("transfer", "Singer set to full interval transfer");
    std::int64_t transfer_q = 0, transfer_n = 0;
    transfer_cmd->add_option("--q", transfer_q, "prime power q")->required();
    transfer_cmd->add_option("--n", transfer_n, "window length (default: Singer threshold)");

    auto* lower_cmd = app.add_subcommand("lower", "Singer-via-Bertrand lower bound witness");
    std::int64_t lower_n = 0;
    lower_cmd->add_option("--n", lower_n, "interval bound N (>= 5)")->required();

    auto* ident_cmd = app.add_subcommand("identities", "Check the exact Sidon identities on a set");
    std::string ident_set;
    ident_cmd->add_option("--set", ident_set, "comma-separated integers")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const char* cache_dir = std::getenv("SIDONLAB_CACHE_DIR");
    std::string snapshot = cache_dir ? std::string(cache_dir) + "/primes.snapshot" : "";
    if (!snapshot.empty()) primes::shared_table().load_snapshot(snapshot);

    int rc = 0;
    try {
        if (singer_cmd->parsed()) rc = run_singer(singer_q, singer_json);
        else if (verify_cmd->parsed()) rc = run_verify(verify_file);
        else if (hmax_cmd->parsed()) rc = run_hmax(hmax_n, hmax_cap, hmax_workers);
        else if (bounds_cmd->parsed()) rc = run_bounds(bounds_from, bounds_to, bounds_csv);
        else if (transfer_cmd->parsed()) rc = run_transfer(transfer_q, transfer_n);
        else if (lower_cmd->parsed()) rc = run_lower(lower_n);
        else if (ident_cmd->parsed()) rc = run_identities(ident_set);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    if (!snapshot.empty() && rc == 0) primes::shared_table().save_snapshot(snapshot);
    return rc;
}
