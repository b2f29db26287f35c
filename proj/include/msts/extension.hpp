#pragma once

#include "msts/design.hpp"
#include "msts/pairs_triples.hpp"

namespace msts {

/// Pairing of a base system over Z_2^n x Z_{k+1} x Z_{ell+1} with an
/// (m, r)-pairs-triples design, r = n+k+ell and m > r.
///
/// n, k and ell are read off the base alphabet: the last two coordinates
/// are the non-binary pair, everything before them must be binary. The m
/// new binary coordinates are appended after position n+1, so pairs-
/// triples point alpha lands at coordinate n+2+alpha.
struct ExtensionPlan {
    Design base;
    PairsTriplesDesign ptd;
    int n;
    int k;
    int ell;

    /// Validates the structural invariants (alphabet shape, r = n+k+ell,
    /// m even and > r, factor shapes); throws std::invalid_argument.
    /// Verifying the base design is the caller's responsibility.
    ExtensionPlan(Design base, PairsTriplesDesign ptd);
};

/// The lengthening construction: zero-padded base blocks, one block per
/// factor pair anchored at each nonzero value of the old coordinates
/// (factor T_{i+1} serves binary coordinate i, T_{n+j} value j of
/// coordinate n, T_{n+k+j} value j of coordinate n+1), and one all-new
/// block per leave triple.
Design extend(const ExtensionPlan& plan);

/// Stable coordinate permutation moving binary coordinates in front of
/// non-binary ones. Coverage, pairwise distances and counts are
/// invariant; idempotent.
Design canonicalize_alphabet(const Design& d);

}  // namespace msts
