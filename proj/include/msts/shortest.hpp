#pragma once

#include <vector>

#include "msts/classical.hpp"
#include "msts/design.hpp"

namespace msts {

/// Parameters of a shortest-length system: n = k*ell binary coordinates
/// arranged as a Z_k x Z_ell grid, plus coordinates of sizes k+1 and
/// ell+1 at positions n and n+1.
///
/// The part builders only need k and ell odd (the k=5 example reuses
/// them); construct_shortest() additionally requires k, ell = 1 or 3
/// (mod 6) so that the two ingredient triple systems exist.
struct ShortestParams {
    int k;
    int ell;
    int n;  // k * ell

    ShortestParams(int k, int ell);
};

/// True iff the general four-part construction applies to (k, ell).
bool shortest_admissible(int k, int ell);

/// Part 1: { {[i-1,j-1],(n,i),(n+1,j)} : i in Z*_{k+1}, j in Z*_{ell+1} }.
/// Covers every pair between the two non-binary coordinates exactly once;
/// the k*ell words use pairwise-distinct binary positions.
std::vector<SparseWord> build_c1(const ShortestParams& p);

/// Part 2: { {[x,j],[y,j],(n,i)} : i in Z*_{k+1}, j in Z_ell, {x,y} in F_{i-1} }
/// for a near-one-factorization F of Z_k. Covers the same-column grid
/// pairs and, with part 1, every {grid point, (n,i)} pair.
std::vector<SparseWord> build_c2(const ShortestParams& p, const Factorization& f);

/// Part 3: the column/row mirror of part 2, driven by a
/// near-one-factorization of Z_ell.
std::vector<SparseWord> build_c3(const ShortestParams& p, const Factorization& g);

/// Part 4: for each triple of an STS(k) and each triple of an STS(ell),
/// the six row-to-column pairings. Covers every grid pair with distinct
/// rows and distinct columns exactly once.
std::vector<SparseWord> build_c4(const ShortestParams& p, const TripleSystem& s1,
                                 const TripleSystem& s2);

/// Union of the four parts over the (n = k*ell, k, ell) alphabet.
/// Throws std::invalid_argument when k or ell is 5 (mod 6) or even.
Design construct_shortest(int k, int ell);

/// The fixed k=5, ell=3 system over Z_2^15 x Z_6 x Z_4: generated parts
/// 1-3 plus a 20-triple replacement for part 4 embedded as data.
Design example_5_3();

}  // namespace msts
