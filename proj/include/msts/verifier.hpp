#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "msts/design.hpp"
#include "msts/pairs_triples.hpp"

namespace msts {

/// Verdicts for the five arithmetic existence conditions on
/// (n, k, ell), plus the admissible residues of n modulo 6.
struct ConditionReport {
    bool parity_nk = false;     // (1) n - k even
    bool parity_nl = false;     // (2) n - ell even
    bool both_odd = false;      // (3) k and ell odd
    bool length_bound = false;  // (4) n >= k*ell
    bool divisibility = false;  // (5) k*ell + (k+ell)n + C(n,2) = 0 (mod 3)
    std::set<int> admissible_residues;

    bool overall() const {
        return parity_nk && parity_nl && both_odd && length_bound && divisibility;
    }
    nlohmann::ordered_json to_json() const;
};

ConditionReport check_necessary_conditions(int k, int ell, long long n);

/// The residues of n mod 6 compatible with conditions (1), (2), (3) and
/// (5); empty iff k = ell = 5 (mod 6). Throws for even k or ell.
std::set<int> admissible_n_residues(int k, int ell);

/// (k*ell + (k+ell)n + C(n,2)) / 3. Throws std::invalid_argument when
/// the numerator is not divisible by 3, naming condition (5).
long long expected_count(int k, int ell, long long n);

/// Everything the independent check of a design found. The design is
/// accepted iff every weight-2 word is covered exactly once, no two
/// codewords are closer than distance 3, and (when the alphabet shape
/// pins one down) the codeword count matches the closed form.
struct VerificationReport {
    bool coverage_ok = false;
    std::vector<SparseWord> uncovered;
    std::vector<SparseWord> multicovered;

    /// Set only when no pair violates the distance bound and at least two
    /// codewords exist; a violation short-circuits with the witness pair.
    std::optional<int> min_distance;
    std::vector<std::pair<SparseWord, SparseWord>> distance_violations;

    /// Set when all coordinates before the last two are binary.
    std::optional<long long> count_expected;
    long long count_actual = 0;

    bool accepted() const {
        return coverage_ok && distance_violations.empty() &&
               (!count_expected || *count_expected == count_actual);
    }
    nlohmann::ordered_json to_json() const;
};

/// Construction-agnostic check of exact-once coverage, minimum distance
/// and expected count. Never throws on bad designs: findings are report
/// content.
VerificationReport verify_msts(const Design& d);

/// Findings for a pairs-triples design: matching validity, factor
/// disjointness, exact-once pair coverage and the triple-count identity.
struct PtdReport {
    bool factors_ok = false;
    bool coverage_ok = false;
    bool count_ok = false;
    std::vector<std::pair<int, int>> uncovered;
    std::vector<std::pair<int, int>> multicovered;

    bool accepted() const { return factors_ok && coverage_ok && count_ok; }
    nlohmann::ordered_json to_json() const;
};

PtdReport verify_ptd(const PairsTriplesDesign& d);

}  // namespace msts
