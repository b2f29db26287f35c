#include "msts/alphabet.hpp"

#include <stdexcept>
#include <string>

namespace msts {

MixedAlphabet::MixedAlphabet(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty())
        throw std::invalid_argument("alphabet must have at least one coordinate");
    for (int q : sizes_)
        if (q < 2)
            throw std::invalid_argument("coordinate size " + std::to_string(q) +
                                        " is below 2");
}

MixedAlphabet MixedAlphabet::grid(int n, int k, int ell) {
    if (n < 1 || k < 1 || ell < 1)
        throw std::invalid_argument("grid alphabet needs n, k, ell >= 1");
    std::vector<int> sizes(static_cast<std::size_t>(n) + 2, 2);
    sizes[n] = k + 1;
    sizes[n + 1] = ell + 1;
    return MixedAlphabet(std::move(sizes));
}

int MixedAlphabet::size(int pos) const {
    if (pos < 0 || pos >= length())
        throw std::out_of_range("coordinate index " + std::to_string(pos) +
                                " out of range");
    return sizes_[pos];
}

int flat_position(const GridPoint& p, int ell) {
    if (ell < 1 || p.col < 0 || p.col >= ell || p.row < 0)
        throw std::invalid_argument("grid point out of range");
    return p.row * ell + p.col;
}

GridPoint grid_point(int pos, int ell) {
    if (ell < 1 || pos < 0)
        throw std::invalid_argument("flat position out of range");
    return GridPoint{pos / ell, pos % ell};
}

}  // namespace msts
