#include "msts/shortest.hpp"

#include <stdexcept>
#include <string>

namespace msts {

namespace {

void require_factorization(const Factorization& f, int order, const char* name) {
    if (f.kind != FactorKind::NearOneFactorization)
        throw std::invalid_argument(std::string(name) +
                                    " must be a near-one-factorization");
    if (f.v != order)
        throw std::invalid_argument(std::string(name) + " has order " +
                                    std::to_string(f.v) + ", expected " +
                                    std::to_string(order));
}

void require_sts(const TripleSystem& s, int order, const char* name) {
    if (s.v != order)
        throw std::invalid_argument(std::string(name) + " has order " +
                                    std::to_string(s.v) + ", expected " +
                                    std::to_string(order));
    if (s.triples.size() !=
        static_cast<std::size_t>(order) * (order - 1) / 6)
        throw std::invalid_argument(std::string(name) + " has wrong triple count");
}

// The 20 replacement triples for the k=5, ell=3 system, as grid points.
constexpr int kExample53Part4[20][3][2] = {
    {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {3, 1}, {4, 2}}, {{0, 0}, {1, 2}, {2, 1}},
    {{0, 0}, {3, 2}, {4, 1}}, {{0, 1}, {1, 2}, {3, 0}}, {{0, 1}, {2, 0}, {4, 2}},
    {{0, 1}, {1, 0}, {3, 2}}, {{0, 1}, {2, 2}, {4, 0}}, {{0, 2}, {1, 1}, {4, 0}},
    {{0, 2}, {2, 0}, {3, 1}}, {{0, 2}, {1, 0}, {4, 1}}, {{0, 2}, {2, 1}, {3, 0}},
    {{1, 0}, {2, 1}, {4, 2}}, {{1, 0}, {2, 2}, {3, 1}}, {{1, 1}, {2, 0}, {3, 2}},
    {{1, 1}, {3, 0}, {4, 2}}, {{1, 2}, {2, 0}, {4, 1}}, {{1, 2}, {3, 1}, {4, 0}},
    {{2, 1}, {3, 2}, {4, 0}}, {{2, 2}, {3, 0}, {4, 1}},
};

}  // namespace

ShortestParams::ShortestParams(int k_, int ell_) : k(k_), ell(ell_), n(k_ * ell_) {
    if (k < 1 || ell < 1 || k % 2 == 0 || ell % 2 == 0)
        throw std::invalid_argument("shortest-length parameters must be odd and >= 1");
}

bool shortest_admissible(int k, int ell) {
    return k >= 1 && ell >= 1 && (k % 6 == 1 || k % 6 == 3) &&
           (ell % 6 == 1 || ell % 6 == 3);
}

std::vector<SparseWord> build_c1(const ShortestParams& p) {
    std::vector<SparseWord> out;
    out.reserve(static_cast<std::size_t>(p.n));
    for (int i = 1; i <= p.k; ++i)
        for (int j = 1; j <= p.ell; ++j)
            out.push_back(SparseWord{{flat_position({i - 1, j - 1}, p.ell), 1},
                                     {p.n, i},
                                     {p.n + 1, j}});
    return out;
}

std::vector<SparseWord> build_c2(const ShortestParams& p, const Factorization& f) {
    require_factorization(f, p.k, "row factorization");
    if (p.k == 1) return {};  // K_1 has no pairs
    std::vector<SparseWord> out;
    out.reserve(static_cast<std::size_t>(p.n) * (p.k - 1) / 2);
    for (int i = 1; i <= p.k; ++i)
        for (int j = 0; j < p.ell; ++j)
            for (const auto& [x, y] : f.factors[i - 1])
                out.push_back(SparseWord{{flat_position({x, j}, p.ell), 1},
                                         {flat_position({y, j}, p.ell), 1},
                                         {p.n, i}});
    return out;
}

std::vector<SparseWord> build_c3(const ShortestParams& p, const Factorization& g) {
    require_factorization(g, p.ell, "column factorization");
    if (p.ell == 1) return {};
    std::vector<SparseWord> out;
    out.reserve(static_cast<std::size_t>(p.n) * (p.ell - 1) / 2);
    for (int j = 1; j <= p.ell; ++j)
        for (int i = 0; i < p.k; ++i)
            for (const auto& [x, y] : g.factors[j - 1])
                out.push_back(SparseWord{{flat_position({i, x}, p.ell), 1},
                                         {flat_position({i, y}, p.ell), 1},
                                         {p.n + 1, j}});
    return out;
}

std::vector<SparseWord> build_c4(const ShortestParams& p, const TripleSystem& s1,
                                 const TripleSystem& s2) {
    require_sts(s1, p.k, "row triple system");
    require_sts(s2, p.ell, "column triple system");
    // The six pairings of a row triple with a column triple, as index
    // permutations of {0,1,2}.
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<SparseWord> out;
    out.reserve(s1.triples.size() * s2.triples.size() * 6);
    for (const auto& rows : s1.triples)
        for (const auto& cols : s2.triples)
            for (const auto& perm : perms) {
                std::vector<Entry> entries;
                entries.reserve(3);
                for (int t = 0; t < 3; ++t)
                    entries.push_back(
                        {flat_position({rows[t], cols[perm[t]]}, p.ell), 1});
                out.push_back(SparseWord(std::move(entries)));
            }
    return out;
}

namespace {

Design assemble(const ShortestParams& p, std::vector<SparseWord> parts,
                nlohmann::ordered_json meta) {
    return Design(MixedAlphabet::grid(p.n, p.k, p.ell), std::move(parts),
                  std::move(meta));
}

}  // namespace

Design construct_shortest(int k, int ell) {
    if (!shortest_admissible(k, ell))
        throw std::invalid_argument(
            "unsupported by general construction: k and ell must be 1 or 3 (mod 6), got k=" +
            std::to_string(k) + " ell=" + std::to_string(ell));
    const ShortestParams p(k, ell);
    std::vector<SparseWord> words = build_c1(p);
    auto append = [&](std::vector<SparseWord> more) {
        words.insert(words.end(), std::make_move_iterator(more.begin()),
                     std::make_move_iterator(more.end()));
    };
    append(build_c2(p, near_one_factorization(k)));
    append(build_c3(p, near_one_factorization(ell)));
    append(build_c4(p, steiner_triple_system(k), steiner_triple_system(ell)));
    nlohmann::ordered_json meta;
    meta["construction"] = "shortest";
    meta["k"] = k;
    meta["l"] = ell;
    return assemble(p, std::move(words), std::move(meta));
}

Design example_5_3() {
    const ShortestParams p(5, 3);
    std::vector<SparseWord> words = build_c1(p);
    auto append = [&](std::vector<SparseWord> more) {
        words.insert(words.end(), std::make_move_iterator(more.begin()),
                     std::make_move_iterator(more.end()));
    };
    append(build_c2(p, near_one_factorization(5)));
    append(build_c3(p, near_one_factorization(3)));
    for (const auto& triple : kExample53Part4) {
        std::vector<Entry> entries;
        entries.reserve(3);
        for (const auto& gp : triple)
            entries.push_back({flat_position({gp[0], gp[1]}, p.ell), 1});
        words.push_back(SparseWord(std::move(entries)));
    }
    nlohmann::ordered_json meta;
    meta["construction"] = "example-5-3";
    meta["k"] = 5;
    meta["l"] = 3;
    return assemble(p, std::move(words), std::move(meta));
}

}  // namespace msts
