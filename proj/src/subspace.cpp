#include "msts/subspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace msts {

SubspacePartition::SubspacePartition(int dim_first, int dim_second)
    : dim_first_(dim_first), dim_second_(dim_second) {
    if (dim_first < 1 || dim_second < 1 || dim_first + dim_second > 16)
        throw std::invalid_argument("subspace dimensions must be >= 1 with total <= 16");
    const std::uint32_t low_mask = (1u << dim_first_) - 1;
    const std::uint32_t total = 1u << total_dim();
    for (std::uint32_t v = 1; v < total; ++v) {
        const bool in_first = (v & ~low_mask) == 0;
        const bool in_second = (v & low_mask) == 0;
        if (!in_first && !in_second) singletons_.push_back(v);
    }
}

MixedAlphabet SubspacePartition::alphabet() const {
    std::vector<int> sizes(singletons_.size(), 2);
    sizes.push_back(1 << dim_first_);
    sizes.push_back(1 << dim_second_);
    return MixedAlphabet(std::move(sizes));
}

int SubspacePartition::cell_of(std::uint32_t v) const {
    if (v == 0 || v >= (1u << total_dim()))
        throw std::invalid_argument("vector outside the nonzero span");
    const std::uint32_t low_mask = (1u << dim_first_) - 1;
    const int m = singleton_count();
    if ((v & ~low_mask) == 0) return m;
    if ((v & low_mask) == 0) return m + 1;
    const auto it = std::lower_bound(singletons_.begin(), singletons_.end(), v);
    return static_cast<int>(it - singletons_.begin());
}

int SubspacePartition::value_of(std::uint32_t v) const {
    const int cell = cell_of(v);
    const int m = singleton_count();
    if (cell == m) return static_cast<int>(v);
    if (cell == m + 1) return static_cast<int>(v >> dim_first_);
    return 1;
}

std::uint32_t SubspacePartition::element_at(int cell_pos, int value) const {
    const int m = singleton_count();
    if (cell_pos < 0 || cell_pos >= m + 2)
        throw std::invalid_argument("cell position out of range");
    if (value == 0) return 0;
    if (cell_pos < m) {
        if (value != 1) throw std::invalid_argument("singleton cells hold one element");
        return singletons_[cell_pos];
    }
    const int dim = cell_pos == m ? dim_first_ : dim_second_;
    if (value < 0 || value >= (1 << dim))
        throw std::invalid_argument("value outside the subspace cell");
    return cell_pos == m ? static_cast<std::uint32_t>(value)
                         : static_cast<std::uint32_t>(value) << dim_first_;
}

SubspacePartition complementary_partition(int k_prime, int l_prime) {
    return SubspacePartition(k_prime, l_prime);
}

Design weight3_codewords(const SubspacePartition& p) {
    const std::uint32_t total = 1u << p.total_dim();
    std::vector<SparseWord> words;
    // Each XOR-zero triple of distinct nonzero vectors appears once as
    // x < y < z = x^y; triples inside a single cell are not codewords.
    for (std::uint32_t x = 1; x < total; ++x) {
        const int cx = p.cell_of(x);
        for (std::uint32_t y = x + 1; y < total; ++y) {
            const std::uint32_t z = x ^ y;
            if (z <= y) continue;
            if (cx == p.cell_of(y)) continue;
            std::vector<Entry> entries{{cx, p.value_of(x)},
                                       {p.cell_of(y), p.value_of(y)},
                                       {p.cell_of(z), p.value_of(z)}};
            words.push_back(SparseWord(std::move(entries)));
        }
    }
    nlohmann::ordered_json meta;
    meta["construction"] = "subspace-partition";
    meta["kprime"] = p.dim_first();
    meta["lprime"] = p.dim_second();
    return Design(p.alphabet(), std::move(words), std::move(meta));
}

std::vector<DenseWord> full_perfect_code(const SubspacePartition& p) {
    const int m = p.singleton_count();
    if (m + p.total_dim() > 20)
        throw std::invalid_argument("alphabet too large to enumerate: 2^" +
                                    std::to_string(m + p.total_dim()) + " words");

    // XOR of the singleton vectors selected by each subset mask.
    std::vector<std::uint32_t> subset_xor(1u << m, 0);
    for (std::uint32_t mask = 1; mask < subset_xor.size(); ++mask) {
        const int low = std::countr_zero(mask);
        subset_xor[mask] = subset_xor[mask & (mask - 1)] ^ p.singletons()[low];
    }

    const std::uint32_t low_mask = (1u << p.dim_first()) - 1;
    std::vector<DenseWord> code;
    for (std::uint32_t mask = 0; mask < subset_xor.size(); ++mask) {
        for (int a = 0; a < (1 << p.dim_first()); ++a) {
            // The second-subspace contribution is forced by the XOR-zero
            // condition; keep the word only if the residue lies there.
            const std::uint32_t residue = subset_xor[mask] ^ static_cast<std::uint32_t>(a);
            if ((residue & low_mask) != 0) continue;
            DenseWord w(static_cast<std::size_t>(m) + 2, 0);
            for (int i = 0; i < m; ++i) w[i] = (mask >> i) & 1;
            w[m] = a;
            w[m + 1] = static_cast<int>(residue >> p.dim_first());
            code.push_back(std::move(w));
        }
    }
    return code;
}

}  // namespace msts
