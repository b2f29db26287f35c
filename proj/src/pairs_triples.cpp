#include "msts/pairs_triples.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "msts/classical.hpp"
#include "msts/verifier.hpp"

namespace msts {

using nlohmann::ordered_json;

PairsTriplesDesign normalize(PairsTriplesDesign d) {
    for (auto& factor : d.factors) {
        for (auto& [a, b] : factor)
            if (a > b) std::swap(a, b);
        std::sort(factor.begin(), factor.end());
    }
    for (auto& t : d.triples) std::sort(t.begin(), t.end());
    std::sort(d.triples.begin(), d.triples.end());
    return d;
}

Design ptd_to_gdd(const PairsTriplesDesign& d) {
    const PtdReport report = verify_ptd(d);
    if (!report.accepted())
        throw std::invalid_argument("pairs-triples design fails verification");

    std::vector<int> sizes(static_cast<std::size_t>(d.m), 2);
    sizes.push_back(d.r + 1);
    std::vector<SparseWord> blocks;
    blocks.reserve(static_cast<std::size_t>(d.r) * d.m / 2 + d.triples.size());
    for (int i = 1; i <= d.r; ++i)
        for (const auto& [x, y] : d.factors[i - 1])
            blocks.push_back(SparseWord{{x, 1}, {y, 1}, {d.m, i}});
    for (const auto& t : d.triples)
        blocks.push_back(SparseWord{{t[0], 1}, {t[1], 1}, {t[2], 1}});

    ordered_json meta;
    meta["construction"] = "pairs-triples";
    meta["m"] = d.m;
    meta["r"] = d.r;
    return Design(MixedAlphabet(std::move(sizes)), std::move(blocks), std::move(meta));
}

PairsTriplesDesign gdd_to_ptd(const Design& g) {
    const auto& sizes = g.alphabet().sizes();
    if (sizes.size() < 2)
        throw std::invalid_argument("design too short for a single-group shape");
    const int m = static_cast<int>(sizes.size()) - 1;
    const int r = sizes[m] - 1;
    for (int i = 0; i < m; ++i)
        if (sizes[i] != 2)
            throw std::invalid_argument("expected binary coordinates before the group");

    if (!verify_msts(g).accepted())
        throw std::invalid_argument("input design fails verification");

    PairsTriplesDesign d;
    d.m = m;
    d.r = r;
    d.factors.resize(r);
    for (const SparseWord& block : g.codewords()) {
        const auto& es = block.entries();
        if (es[2].pos == m) {
            d.factors[es[2].val - 1].push_back({es[0].pos, es[1].pos});
        } else {
            d.triples.push_back({es[0].pos, es[1].pos, es[2].pos});
        }
    }
    return normalize(std::move(d));
}

PairsTriplesDesign ptd_from_one_factorization(int m) {
    Factorization f = one_factorization(m);  // rejects odd m
    PairsTriplesDesign d;
    d.m = m;
    d.r = m - 1;
    d.factors = std::move(f.factors);
    return normalize(std::move(d));
}

PairsTriplesDesign ptd_from_sts(int m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("pairs-triples order must be even");
    if (!sts_admissible(m + 1))
        throw std::invalid_argument("no STS(" + std::to_string(m + 1) +
                                    ") to derive the design from");
    const TripleSystem s = steiner_triple_system(m + 1);
    PairsTriplesDesign d;
    d.m = m;
    d.r = 1;
    d.factors.resize(1);
    for (const auto& t : s.triples) {
        if (t[2] == m)
            d.factors[0].push_back({t[0], t[1]});
        else
            d.triples.push_back(t);
    }
    return normalize(std::move(d));
}

bool ptd_exists(int m, int r) {
    if (m < 2 || m % 2 != 0 || r % 2 == 0 || r < 1 || r > m - 1) return false;
    if (m % 6 == 0) return true;
    return r % 6 == (m - 1) % 6;
}

namespace {

// Backtracking over the pairs of K_m: first the r one-factors, candidate
// pairs in lexicographic order, then a triangulation of the leave that
// always covers the smallest uncovered pair. Factors are canonicalized
// by the partner of vertex 0 increasing, which removes their ordering
// symmetry without losing solutions.
class PtdSearcher {
public:
    PtdSearcher(int m, int r, std::int64_t budget)
        : m_(m),
          r_(r),
          budget_(budget),
          covered_(static_cast<std::size_t>(m) * m, 0),
          matched_(r, std::vector<char>(m, 0)),
          factor_pairs_(r) {}

    std::optional<PairsTriplesDesign> run() {
        if (!build_factor(0)) return std::nullopt;
        PairsTriplesDesign d;
        d.m = m_;
        d.r = r_;
        d.factors = factor_pairs_;
        d.triples = triples_;
        return normalize(std::move(d));
    }

private:
    bool covered(int a, int b) const { return covered_[a * m_ + b] != 0; }
    void set_cover(int a, int b, char on) {
        covered_[a * m_ + b] = on;
        covered_[b * m_ + a] = on;
    }
    bool spend() {
        if (--budget_ < 0) exhausted_ = true;
        return !exhausted_;
    }

    bool build_factor(int t) {
        if (t == r_) return triangulate();
        return extend_matching(t);
    }

    bool extend_matching(int t) {
        if (exhausted_) return false;
        auto& matched = matched_[t];
        int a = 0;
        while (a < m_ && matched[a]) ++a;
        if (a == m_) return build_factor(t + 1);

        const int min_b = a == 0 && t > 0 ? factor_pairs_[t - 1].front().second + 1 : a + 1;
        for (int b = min_b; b < m_; ++b) {
            if (matched[b] || covered(a, b)) continue;
            if (!spend()) return false;
            matched[a] = matched[b] = 1;
            set_cover(a, b, 1);
            factor_pairs_[t].push_back({a, b});
            if (extend_matching(t)) return true;
            factor_pairs_[t].pop_back();
            set_cover(a, b, 0);
            matched[a] = matched[b] = 0;
            if (exhausted_) return false;
        }
        return false;
    }

    bool triangulate() {
        if (exhausted_) return false;
        int a = -1, b = -1;
        for (int i = 0; i < m_ && a < 0; ++i)
            for (int j = i + 1; j < m_; ++j)
                if (!covered(i, j)) {
                    a = i;
                    b = j;
                    break;
                }
        if (a < 0) return true;  // every pair covered

        for (int c = b + 1; c < m_; ++c) {
            if (covered(a, c) || covered(b, c)) continue;
            if (!spend()) return false;
            set_cover(a, b, 1);
            set_cover(a, c, 1);
            set_cover(b, c, 1);
            triples_.push_back({a, b, c});
            if (triangulate()) return true;
            triples_.pop_back();
            set_cover(a, b, 0);
            set_cover(a, c, 0);
            set_cover(b, c, 0);
            if (exhausted_) return false;
        }
        return false;
    }

    int m_;
    int r_;
    std::int64_t budget_;
    bool exhausted_ = false;
    std::vector<char> covered_;
    std::vector<std::vector<char>> matched_;
    std::vector<std::vector<std::pair<int, int>>> factor_pairs_;
    std::vector<std::array<int, 3>> triples_;
};

}  // namespace

std::optional<PairsTriplesDesign> ptd_search(int m, int r, std::int64_t node_budget) {
    if (!ptd_exists(m, r))
        throw std::invalid_argument("no (" + std::to_string(m) + "," +
                                    std::to_string(r) + ")-pairs-triples design exists");
    return PtdSearcher(m, r, node_budget).run();
}

std::string ptd_to_json(const PairsTriplesDesign& d) {
    ordered_json j;
    j["m"] = d.m;
    j["r"] = d.r;
    j["factors"] = ordered_json::array();
    for (const auto& factor : d.factors) {
        ordered_json pairs = ordered_json::array();
        for (const auto& [a, b] : factor) pairs.push_back({a, b});
        j["factors"].push_back(std::move(pairs));
    }
    j["triples"] = ordered_json::array();
    for (const auto& t : d.triples) j["triples"].push_back({t[0], t[1], t[2]});
    return j.dump() + "\n";
}

PairsTriplesDesign ptd_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("bad pairs-triples JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("r") ||
        !j.contains("factors") || !j.contains("triples"))
        throw FormatError("pairs-triples object needs m, r, factors, triples");

    PairsTriplesDesign d;
    if (!j["m"].is_number_integer() || !j["r"].is_number_integer())
        throw FormatError("m and r must be integers");
    d.m = j["m"].get<int>();
    d.r = j["r"].get<int>();
    if (d.m < 2 || d.m % 2 != 0) throw FormatError("m must be even and >= 2");
    if (d.r < 1) throw FormatError("r must be >= 1");

    auto read_point = [&](const ordered_json& v) {
        if (!v.is_number_integer()) throw FormatError("points must be integers");
        const int p = v.get<int>();
        if (p < 0 || p >= d.m) throw FormatError("point out of range");
        return p;
    };
    if (!j["factors"].is_array() ||
        j["factors"].size() != static_cast<std::size_t>(d.r))
        throw FormatError("factors must be an array of r one-factors");
    for (const auto& factor : j["factors"]) {
        if (!factor.is_array()) throw FormatError("each factor must be an array");
        std::vector<std::pair<int, int>> pairs;
        for (const auto& pair : factor) {
            if (!pair.is_array() || pair.size() != 2)
                throw FormatError("factor entries must be [a,b] pairs");
            pairs.push_back({read_point(pair[0]), read_point(pair[1])});
        }
        d.factors.push_back(std::move(pairs));
    }
    if (!j["triples"].is_array()) throw FormatError("triples must be an array");
    for (const auto& t : j["triples"]) {
        if (!t.is_array() || t.size() != 3)
            throw FormatError("triples must be [a,b,c] arrays");
        d.triples.push_back({read_point(t[0]), read_point(t[1]), read_point(t[2])});
    }
    return normalize(std::move(d));
}

void save_ptd(const PairsTriplesDesign& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << ptd_to_json(d);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

PairsTriplesDesign load_ptd(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return ptd_from_json(buf.str());
}

}  // namespace msts
