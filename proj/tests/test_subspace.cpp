#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>

#include "msts/shortest.hpp"
#include "msts/subspace.hpp"
#include "msts/verifier.hpp"
#include "oracle.hpp"

using namespace msts;

namespace {

// Independent route from a dense perfect-code word back to the selected
// field elements, for cross-checks.
std::uint32_t dense_xor(const SubspacePartition& p, const DenseWord& w) {
    std::uint32_t x = 0;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] != 0) x ^= p.element_at(i, w[i]);
    return x;
}

SparseWord to_sparse(const DenseWord& w) {
    std::vector<Entry> entries;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i] != 0) entries.push_back({i, w[i]});
    return SparseWord(std::move(entries));
}

}  // namespace

TEST_CASE("complementary partition: cells and counts") {
    const SubspacePartition p11(1, 1);
    CHECK(p11.singleton_count() == 1);
    CHECK(p11.singletons() == std::vector<std::uint32_t>{3});
    CHECK(p11.cell_of(1) == 1);  // first subspace
    CHECK(p11.cell_of(2) == 2);  // second subspace
    CHECK(p11.cell_of(3) == 0);  // the lone singleton

    CHECK(SubspacePartition(2, 2).singleton_count() == 9);
    CHECK(SubspacePartition(3, 2).singleton_count() == 21);

    CHECK_THROWS_AS(SubspacePartition(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(SubspacePartition(9, 8), std::invalid_argument);
}

TEST_CASE("complementary partition: cells partition the nonzero vectors") {
    for (auto [kp, lp] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}, {2, 4}}) {
        const SubspacePartition p(kp, lp);
        const int m = p.singleton_count();
        CHECK(m == ((1 << kp) - 1) * ((1 << lp) - 1));
        CHECK(p.alphabet().sizes().size() == static_cast<std::size_t>(m) + 2);

        std::set<int> cells_seen;
        for (std::uint32_t v = 1; v < (1u << p.total_dim()); ++v) {
            const int cell = p.cell_of(v);
            CHECK(cell >= 0);
            CHECK(cell < m + 2);
            CHECK(p.element_at(cell, p.value_of(v)) == v);  // value map inverts
            if (cell < m) CHECK(cells_seen.insert(cell).second);  // singletons hold one vector
        }
        CHECK(static_cast<int>(cells_seen.size()) == m);

        // subspace cells plus zero are XOR-closed
        const std::uint32_t low = (1u << kp) - 1;
        for (std::uint32_t a = 1; a <= low; ++a)
            for (std::uint32_t b = 1; b <= low; ++b)
                if (a != b) CHECK(p.cell_of(a ^ b) == m);
    }
}

TEST_CASE("weight-3 codewords: smallest case is the XOR triple") {
    const Design d = weight3_codewords(SubspacePartition(1, 1));
    CHECK(d.size() == 1);
    CHECK(d.codewords().front() == SparseWord{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("weight-3 codewords: counts and verification") {
    const Design d22 = weight3_codewords(SubspacePartition(2, 2));
    CHECK(d22.size() == 33);
    CHECK(d22.alphabet().sizes() == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4});
    CHECK(verify_msts(d22).accepted());
    CHECK(oracle::covers_exactly_once(d22));

    // (m + (k+l)m + C(m,2))/3 with k = 2^kp - 1, l = 2^lp - 1
    const Design d32 = weight3_codewords(SubspacePartition(3, 2));
    CHECK(d32.size() == 147);  // m=21, k=7, l=3: (21 + 210 + 210)/3
    CHECK(verify_msts(d32).accepted());
}

TEST_CASE("two singletons with XOR in the first subspace pair up once") {
    const SubspacePartition p(2, 2);
    const Design d = weight3_codewords(p);
    const int m = p.singleton_count();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const std::uint32_t x = p.singletons()[i] ^ p.singletons()[j];
            if (p.cell_of(x) != m) continue;
            int found = 0;
            for (const auto& w : d.codewords())
                if (w == SparseWord{{i, 1}, {j, 1}, {m, p.value_of(x)}}) ++found;
            CHECK(found == 1);
        }
}

TEST_CASE("full perfect code: smallest case") {
    const auto code = full_perfect_code(SubspacePartition(1, 1));
    REQUIRE(code.size() == 2);
    CHECK(code[0] == DenseWord{0, 0, 0});
    CHECK(code[1] == DenseWord{1, 1, 1});

    // every one of the 8 words lies within distance 1 of exactly one codeword
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const DenseWord w{a, b, c};
                int hits = 0;
                for (const auto& cw : code)
                    if (oracle::dense_distance(w, cw) <= 1) ++hits;
                CHECK(hits == 1);
            }
}

TEST_CASE("full perfect code: selected vectors XOR to zero, zero word present") {
    for (auto [kp, lp] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {1, 3}}) {
        const SubspacePartition p(kp, lp);
        const auto code = full_perfect_code(p);
        CHECK(code.front() == DenseWord(p.singleton_count() + 2, 0));
        for (const auto& w : code) CHECK(dense_xor(p, w) == 0);

        // sphere-packing identity: |C| * (1 + sum (q_i - 1)) = |Q|
        const MixedAlphabet alphabet = p.alphabet();
        long long q_total = 1;
        long long ball = 1;
        for (int q : alphabet.sizes()) {
            q_total *= q;
            ball += q - 1;
        }
        CHECK(static_cast<long long>(code.size()) * ball == q_total);
    }
}

TEST_CASE("full perfect code: weight-3 subset equals the codeword design") {
    for (auto [kp, lp] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}}) {
        const SubspacePartition p(kp, lp);
        std::set<SparseWord> weight3;
        for (const auto& w : full_perfect_code(p)) {
            const SparseWord s = to_sparse(w);
            if (s.weight() == 3) weight3.insert(s);
        }
        const Design d = weight3_codewords(p);
        CHECK(weight3 == std::set<SparseWord>(d.codewords().begin(), d.codewords().end()));
    }
}

TEST_CASE("full perfect code: minimum distance 3 at small sizes") {
    for (auto [kp, lp] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}}) {
        const auto code = full_perfect_code(SubspacePartition(kp, lp));
        int best = 99;
        for (std::size_t a = 0; a < code.size(); ++a)
            for (std::size_t b = a + 1; b < code.size(); ++b)
                best = std::min(best, oracle::dense_distance(code[a], code[b]));
        CHECK(best == 3);
    }
}

TEST_CASE("full perfect code: enumeration budget") {
    // 2^21 * 2^5 words is far beyond the 2^20 cap
    CHECK_THROWS_AS(full_perfect_code(SubspacePartition(3, 2)), std::invalid_argument);
}

TEST_CASE("the (2,2) design shares parameters with the 3x3 grid system") {
    const Design subspace_route = weight3_codewords(SubspacePartition(2, 2));
    const Design grid_route = construct_shortest(3, 3);
    CHECK(subspace_route.alphabet() == grid_route.alphabet());
    CHECK(subspace_route.size() == grid_route.size());
    CHECK(verify_msts(subspace_route).accepted());
    CHECK(verify_msts(grid_route).accepted());
}
