#pragma once

#include <vector>

namespace msts {

/// Mixed alphabet Z_{q_0} x Z_{q_1} x ... x Z_{q_{n-1}}.
///
/// Coordinate i takes values 0..q_i-1. Values are labels, not ring
/// elements; nothing here adds or multiplies them.
class MixedAlphabet {
public:
    /// Every coordinate size must be >= 2.
    explicit MixedAlphabet(std::vector<int> sizes);

    /// The (n, k, ell) shape: n binary coordinates followed by one
    /// coordinate of size k+1 and one of size ell+1.
    static MixedAlphabet grid(int n, int k, int ell);

    int length() const noexcept { return static_cast<int>(sizes_.size()); }
    int size(int pos) const;
    const std::vector<int>& sizes() const noexcept { return sizes_; }

    bool operator==(const MixedAlphabet&) const = default;

private:
    std::vector<int> sizes_;
};

/// A cell [row, col] of the Z_k x Z_ell grid indexing the first k*ell
/// binary coordinates of a shortest-length system.
struct GridPoint {
    int row = 0;
    int col = 0;
    bool operator==(const GridPoint&) const = default;
};

/// Row-major flattening: [row, col] -> row*ell + col.
int flat_position(const GridPoint& p, int ell);

/// Inverse of flat_position.
GridPoint grid_point(int pos, int ell);

}  // namespace msts
