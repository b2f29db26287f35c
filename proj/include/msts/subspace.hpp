#pragma once

#include <cstdint>
#include <vector>

#include "msts/design.hpp"

namespace msts {

/// Partition of the nonzero vectors of a dimension-N binary vector space
/// into two complementary coordinate subspaces plus singletons.
///
/// With first-subspace dimension k' and second-subspace dimension l'
/// (N = k'+l'), the m = (2^k'-1)(2^l'-1) vectors lying in neither
/// subspace each form their own cell. Cells are ordered singletons
/// first (ascending bit pattern), then the k'-subspace, then the
/// l'-subspace, so the induced alphabet is Z_2^m x Z_{2^k'} x Z_{2^l'}.
///
/// Value maps are positional: a subspace element maps to the integer its
/// bits spell within the subspace's coordinate span, a singleton maps
/// to 1.
class SubspacePartition {
public:
    /// Requires 1 <= k', 1 <= l', k'+l' <= 16.
    SubspacePartition(int dim_first, int dim_second);

    int total_dim() const noexcept { return dim_first_ + dim_second_; }
    int dim_first() const noexcept { return dim_first_; }
    int dim_second() const noexcept { return dim_second_; }

    /// m = 2^N - 2^k' - 2^l' + 1.
    int singleton_count() const noexcept { return static_cast<int>(singletons_.size()); }
    const std::vector<std::uint32_t>& singletons() const noexcept { return singletons_; }

    /// Z_2^m x Z_{2^k'} x Z_{2^l'}.
    MixedAlphabet alphabet() const;

    /// Coordinate position of the cell containing the nonzero vector v.
    int cell_of(std::uint32_t v) const;

    /// Value of v inside its own cell (1-based).
    int value_of(std::uint32_t v) const;

    /// The vector a (cell position, value) pair stands for; value 0 is
    /// the zero vector.
    std::uint32_t element_at(int cell_pos, int value) const;

private:
    int dim_first_;
    int dim_second_;
    std::vector<std::uint32_t> singletons_;
};

/// Convenience spelling matching the construction's name.
SubspacePartition complementary_partition(int k_prime, int l_prime);

/// All weight-3 codewords of the induced 1-perfect code: three elements
/// from three distinct cells XORing to zero.
Design weight3_codewords(const SubspacePartition& p);

/// A fully spelled word over the partition's alphabet, one value per cell.
using DenseWord = std::vector<int>;

/// The whole 1-perfect code: every cell contributes one of its elements
/// or zero and the chosen vectors XOR to zero. Requires the total word
/// count 2^m * 2^N to stay within 2^20; throws otherwise.
std::vector<DenseWord> full_perfect_code(const SubspacePartition& p);

}  // namespace msts
