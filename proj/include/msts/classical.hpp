#pragma once

#include <array>
#include <utility>
#include <vector>

namespace msts {

/// Steiner triple system of order v: every pair of Z_v lies in exactly
/// one triple, giving v(v-1)/6 triples.
struct TripleSystem {
    int v = 0;
    std::vector<std::array<int, 3>> triples;
};

enum class FactorKind { OneFactorization, NearOneFactorization };

/// Partition of all pairs of Z_v into factors.
///
/// One-factorization (v even): v-1 factors, each a perfect matching.
/// Near-one-factorization (v odd): v factors, factor i isolating point i.
struct Factorization {
    int v = 0;
    FactorKind kind = FactorKind::OneFactorization;
    std::vector<std::vector<std::pair<int, int>>> factors;
};

/// True iff v == 1 or v mod 6 is 1 or 3, the orders admitting an STS.
bool sts_admissible(int v);

/// Rotational scheme F_i = {{(i+j) mod v, (i-j) mod v} : 1 <= j <= (v-1)/2}.
/// The pair {a,b} lands in the unique F_i with 2i = a+b (mod v), and F_i
/// isolates exactly i. v = 1 yields zero factors. Throws for even v.
Factorization near_one_factorization(int v);

/// Circle method: point v-1 fixed, the rest rotated; v-1 factors of v/2
/// pairs each. Throws for odd v.
Factorization one_factorization(int v);

/// Deterministic STS(v): Bose construction for v = 3 (mod 6), Skolem-type
/// for v = 1 (mod 6); v = 1 gives the empty system. Throws with the
/// residue condition named for inadmissible v.
TripleSystem steiner_triple_system(int v);

}  // namespace msts
