#include "msts/extension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace msts {

ExtensionPlan::ExtensionPlan(Design base_, PairsTriplesDesign ptd_)
    : base(std::move(base_)), ptd(std::move(ptd_)) {
    const auto& sizes = base.alphabet().sizes();
    if (sizes.size() < 2)
        throw std::invalid_argument("base alphabet too short");
    n = static_cast<int>(sizes.size()) - 2;
    k = sizes[n] - 1;
    ell = sizes[n + 1] - 1;
    for (int i = 0; i < n; ++i)
        if (sizes[i] != 2)
            throw std::invalid_argument(
                "base alphabet must be binary before the last two coordinates");
    if (n % 2 == 0 || k % 2 == 0 || ell % 2 == 0)
        throw std::invalid_argument("base parameters n, k, ell must all be odd");
    const int r_needed = n + k + ell;
    if (ptd.r != r_needed)
        throw std::invalid_argument("factor count mismatch: pairs-triples design has r=" +
                                    std::to_string(ptd.r) + ", extension needs r=" +
                                    std::to_string(r_needed));
    if (ptd.m % 2 != 0 || ptd.m <= r_needed)
        throw std::invalid_argument("pairs-triples order must be even and exceed n+k+ell");
    if (ptd.factors.size() != static_cast<std::size_t>(ptd.r))
        throw std::invalid_argument("pairs-triples design is missing factors");
    for (const auto& factor : ptd.factors)
        if (factor.size() != static_cast<std::size_t>(ptd.m) / 2)
            throw std::invalid_argument("factor is not a perfect matching");
}

Design extend(const ExtensionPlan& plan) {
    const int n = plan.n, k = plan.k, ell = plan.ell, m = plan.ptd.m;
    const auto& sizes = plan.base.alphabet().sizes();
    std::vector<int> extended(sizes);
    extended.insert(extended.end(), static_cast<std::size_t>(m), 2);

    // Pairs-triples point alpha -> appended coordinate n+2+alpha.
    const auto pt = [&](int alpha) { return n + 2 + alpha; };

    std::vector<SparseWord> blocks(plan.base.codewords());
    blocks.reserve(blocks.size() + static_cast<std::size_t>(plan.ptd.r) * m / 2 +
                   plan.ptd.triples.size());

    auto add_factor_blocks = [&](const Entry& anchor, int factor_index) {
        for (const auto& [x, y] : plan.ptd.factors[factor_index - 1])
            blocks.push_back(SparseWord{anchor, {pt(x), 1}, {pt(y), 1}});
    };
    for (int i = 0; i < n; ++i) add_factor_blocks({i, 1}, i + 1);
    for (int j = 1; j <= k; ++j) add_factor_blocks({n, j}, n + j);
    for (int j = 1; j <= ell; ++j) add_factor_blocks({n + 1, j}, n + k + j);
    for (const auto& t : plan.ptd.triples)
        blocks.push_back(SparseWord{{pt(t[0]), 1}, {pt(t[1]), 1}, {pt(t[2]), 1}});

    nlohmann::ordered_json meta;
    meta["construction"] = "recursive";
    meta["base"] = plan.base.metadata();
    meta["m"] = m;
    return Design(MixedAlphabet(std::move(extended)), std::move(blocks),
                  std::move(meta));
}

Design canonicalize_alphabet(const Design& d) {
    const auto& sizes = d.alphabet().sizes();
    const int len = static_cast<int>(sizes.size());

    std::vector<int> order;  // old position of each new coordinate
    order.reserve(len);
    for (int i = 0; i < len; ++i)
        if (sizes[i] == 2) order.push_back(i);
    for (int i = 0; i < len; ++i)
        if (sizes[i] != 2) order.push_back(i);

    std::vector<int> new_pos(len);
    for (int i = 0; i < len; ++i) new_pos[order[i]] = i;

    std::vector<int> new_sizes(len);
    for (int i = 0; i < len; ++i) new_sizes[i] = sizes[order[i]];

    std::vector<SparseWord> words;
    words.reserve(d.size());
    for (const SparseWord& w : d.codewords()) {
        std::vector<Entry> entries;
        entries.reserve(w.entries().size());
        for (const Entry& e : w.entries()) entries.push_back({new_pos[e.pos], e.val});
        words.push_back(SparseWord(std::move(entries)));
    }
    return Design(MixedAlphabet(std::move(new_sizes)), std::move(words),
                  d.metadata());
}

}  // namespace msts
