#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "msts/design.hpp"
#include "msts/word.hpp"
#include "oracle.hpp"

using namespace msts;

TEST_CASE("hamming distance on sparse words") {
    CHECK(hamming_distance(SparseWord{}, SparseWord{}) == 0);
    CHECK(hamming_distance(SparseWord{{0, 1}, {15, 1}, {16, 1}},
                           SparseWord{{0, 1}, {15, 1}, {16, 2}}) == 1);
    // positions 0, 1, 15, 16 all differ
    CHECK(hamming_distance(SparseWord{{0, 1}, {15, 2}, {16, 3}},
                           SparseWord{{1, 1}, {15, 1}, {16, 1}}) == 4);
}

namespace {

std::vector<SparseWord> words_up_to_weight2(const MixedAlphabet& a) {
    std::vector<SparseWord> out{SparseWord{}};
    for (int i = 0; i < a.length(); ++i)
        for (int v = 1; v < a.size(i); ++v) out.push_back(SparseWord{{i, v}});
    auto w2 = enumerate_weight2_words(a);
    out.insert(out.end(), w2.begin(), w2.end());
    return out;
}

}  // namespace

TEST_CASE("distance matches the dense definition and is a metric") {
    const MixedAlphabet a({2, 3, 4});
    const auto words = words_up_to_weight2(a);
    REQUIRE(words.size() == 1 + 6 + 11);
    for (const auto& u : words)
        for (const auto& v : words) {
            const int d = hamming_distance(u, v);
            CHECK(d == oracle::dense_distance(oracle::to_dense(u, a), oracle::to_dense(v, a)));
            CHECK(d == hamming_distance(v, u));
            CHECK((d == 0) == (u == v));
        }
    for (const auto& u : words)
        for (const auto& v : words)
            for (const auto& w : words)
                CHECK(hamming_distance(u, w) <=
                      hamming_distance(u, v) + hamming_distance(v, w));
}

TEST_CASE("covers") {
    const SparseWord c{{0, 1}, {15, 1}, {16, 1}};
    CHECK(covers(c, SparseWord{{15, 1}, {16, 1}}));
    CHECK_FALSE(covers(c, SparseWord{{15, 2}, {16, 1}}));
    CHECK_FALSE(covers(SparseWord{{0, 1}, {1, 1}, {2, 1}}, SparseWord{{0, 1}, {3, 1}}));

    CHECK_THROWS_AS(covers(SparseWord{{0, 1}, {1, 1}}, SparseWord{{0, 1}, {1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(covers(c, SparseWord{{0, 1}}), std::invalid_argument);
}

TEST_CASE("covers iff both entries of x appear in c") {
    const MixedAlphabet a({2, 2, 4, 4});
    // every weight-3 word over a
    std::vector<SparseWord> threes;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                for (int vi = 1; vi < a.size(i); ++vi)
                    for (int vj = 1; vj < a.size(j); ++vj)
                        for (int vk = 1; vk < a.size(k); ++vk)
                            threes.push_back(SparseWord{{i, vi}, {j, vj}, {k, vk}});
    for (const auto& c : threes)
        for (const auto& x : enumerate_weight2_words(a)) {
            const bool contained = std::includes(c.entries().begin(), c.entries().end(),
                                                 x.entries().begin(), x.entries().end());
            CHECK(covers(c, x) == contained);
        }
}

TEST_CASE("weight-2 enumeration: counts, uniqueness, closed form") {
    CHECK(enumerate_weight2_words(MixedAlphabet({2, 2})) ==
          std::vector<SparseWord>{SparseWord{{0, 1}, {1, 1}}});
    CHECK(enumerate_weight2_words(MixedAlphabet::grid(9, 3, 3)).size() == 99);
    CHECK(enumerate_weight2_words(MixedAlphabet::grid(15, 5, 3)).size() == 240);

    const std::vector<MixedAlphabet> alphabets = {
        MixedAlphabet({2, 2}),          MixedAlphabet({2, 3, 4, 5}),
        MixedAlphabet({3, 3, 3}),       MixedAlphabet::grid(4, 2, 2),
        MixedAlphabet::grid(9, 3, 3),   MixedAlphabet({5, 2, 2, 7, 2}),
        MixedAlphabet(std::vector<int>(12, 2)),
    };
    for (const auto& a : alphabets) {
        const auto words = enumerate_weight2_words(a);
        const std::set<SparseWord> unique(words.begin(), words.end());
        CHECK(unique.size() == words.size());
        CHECK(static_cast<long long>(words.size()) == weight2_count(a));
        CHECK(words.size() == oracle::dense_weight2_words(a).size());
        for (const auto& w : words) {
            CHECK(w.weight() == 2);
            validate_word(w, a);
        }
    }
}

TEST_CASE("grid flattening") {
    CHECK(flat_position({0, 0}, 3) == 0);
    CHECK(flat_position({4, 2}, 3) == 14);
    CHECK(flat_position({2, 1}, 3) == 7);
    for (int row = 0; row < 5; ++row)
        for (int col = 0; col < 3; ++col)
            CHECK(grid_point(flat_position({row, col}, 3), 3) == GridPoint{row, col});
    CHECK_THROWS_AS(flat_position({0, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(flat_position({-1, 0}, 3), std::invalid_argument);
}

TEST_CASE("sparse word invariants") {
    const SparseWord w{{5, 2}, {1, 1}};  // unsorted input is sorted
    CHECK(w.entries() == std::vector<Entry>{{1, 1}, {5, 2}});
    CHECK_THROWS_AS(SparseWord({{1, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseWord({{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseWord({{-1, 1}}), std::invalid_argument);

    const MixedAlphabet a({2, 4});
    validate_word(SparseWord{{1, 3}}, a);
    CHECK_THROWS_AS(validate_word(SparseWord{{1, 4}}, a), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(SparseWord{{2, 1}}, a), std::invalid_argument);
}

TEST_CASE("alphabet invariants") {
    CHECK_THROWS_AS(MixedAlphabet({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(MixedAlphabet(std::vector<int>{}), std::invalid_argument);
    const MixedAlphabet g = MixedAlphabet::grid(9, 3, 3);
    CHECK(g.length() == 11);
    CHECK(g.size(8) == 2);
    CHECK(g.size(9) == 4);
    CHECK(g.size(10) == 4);
}

TEST_CASE("design invariants") {
    const MixedAlphabet a({2, 2, 2, 2});
    const SparseWord w1{{0, 1}, {1, 1}, {2, 1}};
    const SparseWord w2{{0, 1}, {1, 1}, {3, 1}};
    CHECK_THROWS_AS(Design(a, {w1, w1}), std::invalid_argument);
    CHECK_THROWS_AS(Design(a, {SparseWord{{0, 1}, {1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(Design(a, {SparseWord{{0, 1}, {1, 1}, {4, 1}}}), std::invalid_argument);

    nlohmann::ordered_json meta;
    meta["construction"] = "test";
    const Design d1(a, {w2, w1}, meta);
    const Design d2(a, {w1, w2});
    CHECK(d1 == d2);  // metadata ignored, order canonicalized
    CHECK(d1.codewords().front() == w1);
    CHECK(d1.contains(w2));
    CHECK_FALSE(d1.contains(SparseWord{{1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("design jsonl roundtrip") {
    const MixedAlphabet a({2, 2, 4});
    nlohmann::ordered_json meta;
    meta["construction"] = "test";
    const Design d(a, {SparseWord{{0, 1}, {1, 1}, {2, 3}}, SparseWord{{0, 1}, {1, 1}, {2, 1}}},
                   meta);
    const std::string text = to_jsonl(d);
    CHECK(text ==
          "{\"format\":\"msts-design\",\"version\":1,\"alphabet\":[2,2,4],"
          "\"meta\":{\"construction\":\"test\"}}\n"
          "{\"cw\":[[0,1],[1,1],[2,1]]}\n"
          "{\"cw\":[[0,1],[1,1],[2,3]]}\n");
    const Design back = design_from_jsonl(text);
    CHECK(back == d);
    CHECK(to_jsonl(back) == text);
}

TEST_CASE("design jsonl rejects malformed input") {
    const std::string header =
        "{\"format\":\"msts-design\",\"version\":1,\"alphabet\":[2,2,4],\"meta\":{}}\n";
    CHECK_THROWS_AS(design_from_jsonl(std::string("")), FormatError);
    CHECK_THROWS_AS(design_from_jsonl(std::string("{\"format\":\"other\"}\n")), FormatError);
    CHECK_THROWS_AS(design_from_jsonl(header + "not json\n"), FormatError);
    // duplicate line
    CHECK_THROWS_AS(design_from_jsonl(header +
                                      "{\"cw\":[[0,1],[1,1],[2,1]]}\n"
                                      "{\"cw\":[[0,1],[1,1],[2,1]]}\n"),
                    FormatError);
    // positions not ascending
    CHECK_THROWS_AS(design_from_jsonl(header + "{\"cw\":[[1,1],[0,1],[2,1]]}\n"), FormatError);
    // value out of range
    CHECK_THROWS_AS(design_from_jsonl(header + "{\"cw\":[[0,1],[1,1],[2,5]]}\n"), FormatError);
    // wrong arity
    CHECK_THROWS_AS(design_from_jsonl(header + "{\"cw\":[[0,1],[1,1]]}\n"), FormatError);
}
