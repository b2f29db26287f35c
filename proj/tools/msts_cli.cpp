// Command-line front end: constructs mixed Steiner triple systems, checks
// parameter admissibility and verifies design files.
//
// Exit codes: 0 success/accepted, 1 domain rejection (invalid parameters
// or failed verification), 2 I/O or format error.

#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "msts/design.hpp"
#include "msts/extension.hpp"
#include "msts/pairs_triples.hpp"
#include "msts/shortest.hpp"
#include "msts/subspace.hpp"
#include "msts/verifier.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kIo = 2;

// Verifies then writes; a design that fails its own verification never
// reaches the filesystem.
int finish_design(const msts::Design& d, const std::filesystem::path& out,
                  bool no_verify, const std::string& summary) {
    if (!no_verify) {
        const msts::VerificationReport report = msts::verify_msts(d);
        if (!report.accepted()) {
            std::cerr << "constructed design failed verification:\n"
                      << report.to_json().dump() << "\n";
            return kDomain;
        }
    }
    msts::save_design(d, out);
    std::cout << summary << " -> " << out.string() << "\n";
    return kOk;
}

int run_construct(int k, int l, const std::filesystem::path& out, bool no_verify) {
    if (k == 5 && l == 3) {
        const msts::Design d = msts::example_5_3();
        return finish_design(d, out, no_verify,
                             "construct k=5 l=3 n=15 codewords=" + std::to_string(d.size()));
    }
    if (!msts::shortest_admissible(k, l)) {
        std::cerr << "no shortest-length system for k=" << k << " l=" << l
                  << ": both must be 1 or 3 (mod 6)";
        if (k % 6 == 5 && l % 6 == 5)
            std::cerr << " (k = l = 5 (mod 6) admits no length at all)";
        std::cerr << "\n";
        return kDomain;
    }
    const msts::Design d = msts::construct_shortest(k, l);
    return finish_design(d, out, no_verify,
                         "construct k=" + std::to_string(k) + " l=" + std::to_string(l) +
                             " n=" + std::to_string(k * l) +
                             " codewords=" + std::to_string(d.size()));
}

int run_verify(const std::filesystem::path& in) {
    const msts::Design d = msts::load_design(in);
    const msts::VerificationReport report = msts::verify_msts(d);
    std::cout << report.to_json().dump() << "\n";
    return report.accepted() ? kOk : kDomain;
}

int run_check(int k, int l, std::optional<long long> n) {
    if (n) {
        const msts::ConditionReport report = msts::check_necessary_conditions(k, l, *n);
        std::cout << report.to_json().dump() << "\n";
        return report.overall() ? kOk : kDomain;
    }
    if (k < 1 || l < 1 || k % 2 == 0 || l % 2 == 0) {
        std::cerr << "k and l must be odd and >= 1\n";
        return kDomain;
    }
    const std::set<int> residues = msts::admissible_n_residues(k, l);
    nlohmann::ordered_json j;
    j["admissible_residues"] = residues;
    if (!residues.empty()) {
        long long min_n = static_cast<long long>(k) * l;
        while (!residues.contains(static_cast<int>(min_n % 6))) ++min_n;
        j["min_n"] = min_n;
    } else {
        j["min_n"] = nullptr;
    }
    std::cout << j.dump() << "\n";
    return residues.empty() ? kDomain : kOk;
}

int run_partition_code(int kprime, int lprime, const std::filesystem::path& out,
                       bool no_verify) {
    const msts::SubspacePartition p = msts::complementary_partition(kprime, lprime);
    const msts::Design d = msts::weight3_codewords(p);
    return finish_design(d, out, no_verify,
                         "partition-code kprime=" + std::to_string(kprime) +
                             " lprime=" + std::to_string(lprime) +
                             " m=" + std::to_string(p.singleton_count()) +
                             " codewords=" + std::to_string(d.size()));
}

int run_ptd(int m, int r, const std::filesystem::path& out, long long budget) {
    if (!msts::ptd_exists(m, r)) {
        std::cerr << "no (" << m << "," << r << ")-pairs-triples design: need m even, "
                  << "r odd in [1, m-1], and m = 0 (mod 6) or r = m-1 (mod 6)\n";
        return kDomain;
    }
    msts::PairsTriplesDesign d;
    if (r == m - 1) {
        d = msts::ptd_from_one_factorization(m);
    } else if (r == 1 && msts::sts_admissible(m + 1)) {
        d = msts::ptd_from_sts(m);
    } else {
        const auto found = msts::ptd_search(m, r, budget);
        if (!found) {
            std::cerr << "search budget exhausted for (" << m << "," << r << ")\n";
            return kDomain;
        }
        d = *found;
    }
    const msts::PtdReport report = msts::verify_ptd(d);
    if (!report.accepted()) {
        std::cerr << "constructed pairs-triples design failed verification:\n"
                  << report.to_json().dump() << "\n";
        return kDomain;
    }
    msts::save_ptd(d, out);
    std::cout << "ptd m=" << m << " r=" << r << " factors=" << d.factors.size()
              << " triples=" << d.triples.size() << " -> " << out.string() << "\n";
    return kOk;
}

int run_extend(const std::filesystem::path& base_path,
               const std::filesystem::path& ptd_path, const std::filesystem::path& out,
               bool canonical, bool no_verify) {
    const msts::Design base = msts::load_design(base_path);
    if (!no_verify && !msts::verify_msts(base).accepted()) {
        std::cerr << "base design fails verification\n";
        return kDomain;
    }
    const msts::PairsTriplesDesign ptd = msts::load_ptd(ptd_path);
    if (!msts::verify_ptd(ptd).accepted()) {
        std::cerr << "pairs-triples design fails verification\n";
        return kDomain;
    }
    msts::Design extended = msts::extend(msts::ExtensionPlan(base, ptd));
    if (canonical) extended = msts::canonicalize_alphabet(extended);
    return finish_design(extended, out, no_verify,
                         "extend n_total=" + std::to_string(extended.alphabet().length()) +
                             " codewords=" + std::to_string(extended.size()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed Steiner triple system toolkit"};
    app.require_subcommand(1);

    int k = 0, l = 0, kprime = 0, lprime = 0, m = 0, r = 0;
    long long n = -1, budget = 50'000'000;
    std::string out, in, base_path, ptd_path;
    bool no_verify = false, canonical = false;

    auto* construct = app.add_subcommand("construct", "build a shortest-length system");
    construct->add_option("--k", k)->required();
    construct->add_option("--l", l)->required();
    construct->add_option("-o,--out", out)->required();
    construct->add_flag("--no-verify", no_verify);

    auto* verify = app.add_subcommand("verify", "verify a design file");
    verify->add_option("input", in)->required();

    auto* check = app.add_subcommand("check", "evaluate the necessary conditions");
    check->add_option("--k", k)->required();
    check->add_option("--l", l)->required();
    check->add_option("--n", n);

    auto* partition =
        app.add_subcommand("partition-code", "build the subspace-partition system");
    partition->add_option("--kprime", kprime)->required();
    partition->add_option("--lprime", lprime)->required();
    partition->add_option("-o,--out", out)->required();
    partition->add_flag("--no-verify", no_verify);

    auto* ptd = app.add_subcommand("ptd", "build a pairs-triples design");
    ptd->add_option("--m", m)->required();
    ptd->add_option("--r", r)->required();
    ptd->add_option("-o,--out", out)->required();
    ptd->add_option("--budget", budget);

    auto* extend =
        app.add_subcommand("extend", "lengthen a system with a pairs-triples design");
    extend->add_option("--base", base_path)->required();
    extend->add_option("--ptd", ptd_path)->required();
    extend->add_option("-o,--out", out)->required();
    extend->add_flag("--canonical", canonical);
    extend->add_flag("--no-verify", no_verify);

    auto* example = app.add_subcommand("example", "write the embedded k=5 l=3 system");
    example->add_option("-o,--out", out)->required();
    example->add_flag("--no-verify", no_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kDomain;
    }

    try {
        if (construct->parsed()) return run_construct(k, l, out, no_verify);
        if (verify->parsed()) return run_verify(in);
        if (check->parsed())
            return run_check(k, l, n >= 0 ? std::optional<long long>(n) : std::nullopt);
        if (partition->parsed()) return run_partition_code(kprime, lprime, out, no_verify);
        if (ptd->parsed()) return run_ptd(m, r, out, budget);
        if (extend->parsed())
            return run_extend(base_path, ptd_path, out, canonical, no_verify);
        if (example->parsed()) {
            const msts::Design d = msts::example_5_3();
            return finish_design(d, out, no_verify,
                                 "example k=5 l=3 codewords=" + std::to_string(d.size()));
        }
    } catch (const msts::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}
