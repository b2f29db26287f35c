#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msts/design.hpp"

namespace msts {

/// r disjoint one-factors of K_m plus a triple set covering the leave:
/// every pair of Z_m lies in exactly one factor or exactly one triple,
/// never both. m is even, r odd, and |triples| = (C(m,2) - r*m/2)/3.
///
/// factors[i] holds T_{i+1}; the 1-based factor index is what the block
/// labels of the equivalent single-group design use.
struct PairsTriplesDesign {
    int m = 0;
    int r = 0;
    std::vector<std::vector<std::pair<int, int>>> factors;
    std::vector<std::array<int, 3>> triples;

    bool operator==(const PairsTriplesDesign&) const = default;
};

/// Sorts pairs, factors' pair lists and triples into canonical order.
PairsTriplesDesign normalize(PairsTriplesDesign d);

/// The equivalent design over Z_2^m x Z_{r+1}: one block
/// {(x,1),(y,1),(m,i)} per pair of T_i plus one all-binary block per
/// triple.
Design ptd_to_gdd(const PairsTriplesDesign& d);

/// Inverse of ptd_to_gdd: factor i collects the pairs of blocks through
/// (m,i), the triples are the all-binary blocks. The input must pass
/// verify_msts; throws std::invalid_argument otherwise.
PairsTriplesDesign gdd_to_ptd(const Design& g);

/// r = m-1: the full one-factorization of K_m, no triples.
PairsTriplesDesign ptd_from_one_factorization(int m);

/// r = 1: T_1 = pairs through the last point of an STS(m+1), triples =
/// the blocks avoiding that point. Requires m+1 = 1 or 3 (mod 6).
PairsTriplesDesign ptd_from_sts(int m);

/// The exact existence condition: m even, r odd, 1 <= r <= m-1, and
/// either m = 0 (mod 6), or m = 2 or 4 (mod 6) with r = m-1 (mod 6).
bool ptd_exists(int m, int r);

/// Deterministic backtracking: chooses the r one-factors over candidate
/// pairs in lexicographic order, then partitions the leave into triples,
/// always branching on the smallest uncovered pair. Returns nullopt when
/// the node budget runs out (a non-error outcome); throws
/// std::invalid_argument when ptd_exists(m, r) is false.
std::optional<PairsTriplesDesign> ptd_search(int m, int r,
                                             std::int64_t node_budget = 50'000'000);

/// Single-object JSON form:
/// {"m":m,"r":r,"factors":[[[a,b],...],...],"triples":[[a,b,c],...]}.
std::string ptd_to_json(const PairsTriplesDesign& d);

/// Parses and structurally validates the JSON form; throws FormatError.
PairsTriplesDesign ptd_from_json(const std::string& text);

void save_ptd(const PairsTriplesDesign& d, const std::filesystem::path& path);
PairsTriplesDesign load_ptd(const std::filesystem::path& path);

}  // namespace msts
