#include "msts/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace msts {

using nlohmann::ordered_json;

namespace {

ordered_json word_json(const SparseWord& w) {
    ordered_json pairs = ordered_json::array();
    for (const Entry& e : w.entries()) pairs.push_back({e.pos, e.val});
    return pairs;
}

}  // namespace

ordered_json ConditionReport::to_json() const {
    ordered_json j;
    j["n_minus_k_even"] = parity_nk;
    j["n_minus_l_even"] = parity_nl;
    j["k_l_odd"] = both_odd;
    j["n_at_least_k_times_l"] = length_bound;
    j["pair_count_divisible_by_3"] = divisibility;
    j["admissible_residues"] = admissible_residues;
    j["overall"] = overall();
    return j;
}

ConditionReport check_necessary_conditions(int k, int ell, long long n) {
    if (k < 1 || ell < 1 || n < 1)
        throw std::invalid_argument("parameters must be >= 1");
    ConditionReport r;
    r.parity_nk = (n - k) % 2 == 0;
    r.parity_nl = (n - ell) % 2 == 0;
    r.both_odd = k % 2 == 1 && ell % 2 == 1;
    r.length_bound = n >= static_cast<long long>(k) * ell;
    r.divisibility =
        (static_cast<long long>(k) * ell + (k + ell) * n + n * (n - 1) / 2) % 3 == 0;
    if (r.both_odd) r.admissible_residues = admissible_n_residues(k, ell);
    return r;
}

std::set<int> admissible_n_residues(int k, int ell) {
    if (k < 1 || ell < 1 || k % 2 == 0 || ell % 2 == 0)
        throw std::invalid_argument("k and ell must be odd and >= 1");
    std::set<int> residues;
    for (int res = 0; res < 6; ++res) {
        const bool parity = (res - k) % 2 == 0 && (res - ell) % 2 == 0;
        const long long pairs =
            static_cast<long long>(k) * ell + static_cast<long long>(k + ell) * res +
            static_cast<long long>(res) * (res - 1) / 2;
        if (parity && pairs % 3 == 0) residues.insert(res);
    }
    return residues;
}

long long expected_count(int k, int ell, long long n) {
    if (k < 1 || ell < 1 || n < 0)
        throw std::invalid_argument("parameters out of range");
    const long long pairs =
        static_cast<long long>(k) * ell + static_cast<long long>(k + ell) * n +
        n * (n - 1) / 2;
    if (pairs % 3 != 0)
        throw std::invalid_argument(
            "pair count " + std::to_string(pairs) +
            " is not divisible by 3 (condition (5) fails)");
    return pairs / 3;
}

ordered_json VerificationReport::to_json() const {
    ordered_json j;
    j["accepted"] = accepted();
    j["coverage_ok"] = coverage_ok;
    j["uncovered"] = ordered_json::array();
    for (const auto& w : uncovered) j["uncovered"].push_back(word_json(w));
    j["multicovered"] = ordered_json::array();
    for (const auto& w : multicovered) j["multicovered"].push_back(word_json(w));
    j["min_distance"] = min_distance ? ordered_json(*min_distance) : ordered_json(nullptr);
    j["distance_violations"] = ordered_json::array();
    for (const auto& [a, b] : distance_violations)
        j["distance_violations"].push_back({word_json(a), word_json(b)});
    j["count_expected"] =
        count_expected ? ordered_json(*count_expected) : ordered_json(nullptr);
    j["count_actual"] = count_actual;
    return j;
}

VerificationReport verify_msts(const Design& d) {
    VerificationReport report;
    report.count_actual = static_cast<long long>(d.size());

    const auto& sizes = d.alphabet().sizes();
    const int len = static_cast<int>(sizes.size());

    // Count check only when the alphabet shape pins (n, k, ell) down:
    // everything before the last two coordinates must be binary.
    if (len >= 2 &&
        std::all_of(sizes.begin(), sizes.end() - 2, [](int q) { return q == 2; })) {
        const int n = len - 2, k = sizes[len - 2] - 1, ell = sizes[len - 1] - 1;
        const long long pairs = static_cast<long long>(k) * ell +
                                static_cast<long long>(k + ell) * n +
                                static_cast<long long>(n) * (n - 1) / 2;
        if (pairs % 3 == 0) report.count_expected = pairs / 3;
    }

    // Exact-once coverage over every weight-2 word, via a flat index:
    // block (i, j), i < j, holds (q_i-1)(q_j-1) cells in value order.
    std::vector<long long> block_offset(static_cast<std::size_t>(len) * len, -1);
    long long total = 0;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            block_offset[static_cast<std::size_t>(i) * len + j] = total;
            total += static_cast<long long>(sizes[i] - 1) * (sizes[j] - 1);
        }

    std::vector<std::uint32_t> cover_count(static_cast<std::size_t>(total), 0);
    auto cell = [&](const Entry& lo, const Entry& hi) {
        return block_offset[static_cast<std::size_t>(lo.pos) * len + hi.pos] +
               static_cast<long long>(lo.val - 1) * (sizes[hi.pos] - 1) + (hi.val - 1);
    };
    for (const SparseWord& w : d.codewords()) {
        const auto& e = w.entries();
        ++cover_count[cell(e[0], e[1])];
        ++cover_count[cell(e[0], e[2])];
        ++cover_count[cell(e[1], e[2])];
    }

    long long idx = 0;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            for (int vi = 1; vi < sizes[i]; ++vi)
                for (int vj = 1; vj < sizes[j]; ++vj, ++idx) {
                    if (cover_count[idx] == 1) continue;
                    auto& sink = cover_count[idx] == 0 ? report.uncovered
                                                       : report.multicovered;
                    sink.push_back(SparseWord{{i, vi}, {j, vj}});
                }
    report.coverage_ok = report.uncovered.empty() && report.multicovered.empty();

    // Pairwise minimum distance, short-circuiting below 3 with a witness.
    const auto& cws = d.codewords();
    int min_seen = -1;
    for (std::size_t a = 0; a < cws.size() && report.distance_violations.empty(); ++a)
        for (std::size_t b = a + 1; b < cws.size(); ++b) {
            const int dist = hamming_distance(cws[a], cws[b]);
            if (dist < 3) {
                report.distance_violations.push_back({cws[a], cws[b]});
                break;
            }
            if (min_seen < 0 || dist < min_seen) min_seen = dist;
        }
    if (report.distance_violations.empty() && min_seen >= 0)
        report.min_distance = min_seen;
    return report;
}

ordered_json PtdReport::to_json() const {
    ordered_json j;
    j["accepted"] = accepted();
    j["factors_ok"] = factors_ok;
    j["coverage_ok"] = coverage_ok;
    j["count_ok"] = count_ok;
    j["uncovered"] = ordered_json::array();
    for (const auto& [a, b] : uncovered) j["uncovered"].push_back({a, b});
    j["multicovered"] = ordered_json::array();
    for (const auto& [a, b] : multicovered) j["multicovered"].push_back({a, b});
    return j;
}

PtdReport verify_ptd(const PairsTriplesDesign& d) {
    PtdReport report;
    const int m = d.m;
    if (m < 2 || m % 2 != 0 || d.r < 1 || d.r % 2 == 0 ||
        d.factors.size() != static_cast<std::size_t>(d.r))
        return report;  // nothing else is meaningful

    report.factors_ok = true;
    for (const auto& factor : d.factors) {
        if (factor.size() != static_cast<std::size_t>(m) / 2) report.factors_ok = false;
        std::vector<char> seen(m, 0);
        for (const auto& [a, b] : factor) {
            if (a < 0 || b < 0 || a >= m || b >= m || a == b || seen[a] || seen[b]) {
                report.factors_ok = false;
                continue;
            }
            seen[a] = seen[b] = 1;
        }
    }

    std::vector<std::uint32_t> count(static_cast<std::size_t>(m) * m, 0);
    auto bump = [&](int a, int b) {
        if (a >= 0 && b >= 0 && a < m && b < m && a != b)
            ++count[static_cast<std::size_t>(std::min(a, b)) * m + std::max(a, b)];
    };
    for (const auto& factor : d.factors)
        for (const auto& [a, b] : factor) bump(a, b);
    for (const auto& t : d.triples) {
        bump(t[0], t[1]);
        bump(t[0], t[2]);
        bump(t[1], t[2]);
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const auto c = count[static_cast<std::size_t>(a) * m + b];
            if (c == 0) report.uncovered.push_back({a, b});
            if (c >= 2) report.multicovered.push_back({a, b});
        }
    report.coverage_ok = report.uncovered.empty() && report.multicovered.empty();

    const long long all_pairs = static_cast<long long>(m) * (m - 1) / 2;
    const long long matched = static_cast<long long>(d.r) * m / 2;
    report.count_ok = (all_pairs - matched) % 3 == 0 &&
                      static_cast<long long>(d.triples.size()) ==
                          (all_pairs - matched) / 3;
    return report;
}

}  // namespace msts
