#include "msts/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace msts {

namespace {

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

std::array<int, 3> sorted_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

// Bose construction for v = 6t+3. Points are (x, a) in Z_{2t+1} x {0,1,2},
// flattened as x + a*(2t+1). The quasigroup x*y = (x+y)(t+1) mod 2t+1 is
// idempotent and commutative.
TripleSystem sts_bose(int v) {
    const int q = v / 3;  // 2t+1
    const int half = (q + 1) / 2;
    auto qg = [&](int x, int y) { return static_cast<int>((static_cast<long long>(x) + y) * half % q); };
    auto pt = [&](int x, int a) { return x + a * q; };

    TripleSystem s{v, {}};
    for (int x = 0; x < q; ++x)
        s.triples.push_back(sorted_triple(pt(x, 0), pt(x, 1), pt(x, 2)));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int a = 0; a < 3; ++a)
                s.triples.push_back(
                    sorted_triple(pt(x, a), pt(y, a), pt(qg(x, y), (a + 1) % 3)));
    std::sort(s.triples.begin(), s.triples.end());
    return s;
}

// Skolem-type construction for v = 6t+1, t >= 1. Points are
// (x, a) in Z_{2t} x {0,1,2} plus an extra point 6t. The quasigroup on
// Z_{2t} is half-idempotent: x*x = x for x < t and x*x = x-t otherwise.
TripleSystem sts_skolem(int v) {
    const int q = (v - 1) / 3;  // 2t
    const int t = q / 2;
    auto qg = [&](int x, int y) {
        int e = (x + y) % q;
        return e % 2 == 0 ? e / 2 : t + (e - 1) / 2;
    };
    auto pt = [&](int x, int a) { return x + a * q; };
    const int inf = v - 1;

    TripleSystem s{v, {}};
    for (int x = 0; x < t; ++x)
        s.triples.push_back(sorted_triple(pt(x, 0), pt(x, 1), pt(x, 2)));
    for (int x = t; x < q; ++x)
        for (int a = 0; a < 3; ++a)
            s.triples.push_back(sorted_triple(inf, pt(x, a), pt(x - t, (a + 1) % 3)));
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int a = 0; a < 3; ++a)
                s.triples.push_back(
                    sorted_triple(pt(x, a), pt(y, a), pt(qg(x, y), (a + 1) % 3)));
    std::sort(s.triples.begin(), s.triples.end());
    return s;
}

}  // namespace

bool sts_admissible(int v) { return v >= 1 && (v % 6 == 1 || v % 6 == 3); }

Factorization near_one_factorization(int v) {
    if (v < 1) throw std::invalid_argument("order must be positive");
    if (v % 2 == 0)
        throw std::invalid_argument("near-one-factorization needs odd order, got " +
                                    std::to_string(v));
    Factorization f{v, FactorKind::NearOneFactorization, {}};
    if (v == 1) return f;  // no pairs to place
    f.factors.resize(v);
    for (int i = 0; i < v; ++i) {
        auto& factor = f.factors[i];
        for (int j = 1; j <= (v - 1) / 2; ++j)
            factor.push_back(ordered((i + j) % v, ((i - j) % v + v) % v));
        std::sort(factor.begin(), factor.end());
    }
    return f;
}

Factorization one_factorization(int v) {
    if (v < 2 || v % 2 != 0)
        throw std::invalid_argument("one-factorization needs even order >= 2, got " +
                                    std::to_string(v));
    Factorization f{v, FactorKind::OneFactorization, {}};
    const int w = v - 1;  // rotating wheel
    f.factors.resize(w);
    for (int r = 0; r < w; ++r) {
        auto& factor = f.factors[r];
        factor.push_back(ordered(v - 1, r));
        for (int j = 1; j <= v / 2 - 1; ++j)
            factor.push_back(ordered((r + j) % w, ((r - j) % w + w) % w));
        std::sort(factor.begin(), factor.end());
    }
    return f;
}

TripleSystem steiner_triple_system(int v) {
    if (!sts_admissible(v))
        throw std::invalid_argument("no STS(" + std::to_string(v) +
                                    "): order must be 1 or 3 (mod 6)");
    if (v == 1) return TripleSystem{1, {}};
    if (v == 3) return TripleSystem{3, {{{0, 1, 2}}}};
    return v % 6 == 3 ? sts_bose(v) : sts_skolem(v);
}

}  // namespace msts
