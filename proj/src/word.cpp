#include "msts/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace msts {

namespace {

void check_entries(const std::vector<Entry>& es) {
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].pos < 0)
            throw std::invalid_argument("negative coordinate index");
        if (es[i].val < 1)
            throw std::invalid_argument("sparse entries must be nonzero");
        if (i > 0 && es[i - 1].pos == es[i].pos)
            throw std::invalid_argument("repeated coordinate index " +
                                        std::to_string(es[i].pos));
    }
}

}  // namespace

SparseWord::SparseWord(std::initializer_list<Entry> entries)
    : SparseWord(std::vector<Entry>(entries)) {}

SparseWord::SparseWord(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    check_entries(entries_);
}

int hamming_distance(const SparseWord& u, const SparseWord& v) noexcept {
    const auto& a = u.entries();
    const auto& b = v.entries();
    std::size_t i = 0, j = 0;
    int d = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].pos < b[j].pos) {
            ++d;
            ++i;
        } else if (a[i].pos > b[j].pos) {
            ++d;
            ++j;
        } else {
            if (a[i].val != b[j].val) ++d;
            ++i;
            ++j;
        }
    }
    d += static_cast<int>((a.size() - i) + (b.size() - j));
    return d;
}

bool covers(const SparseWord& c, const SparseWord& x) {
    if (c.weight() != 3)
        throw std::invalid_argument("covering codeword must have weight 3");
    if (x.weight() != 2)
        throw std::invalid_argument("covered word must have weight 2");
    return hamming_distance(x, c) == 1;
}

void validate_word(const SparseWord& w, const MixedAlphabet& a) {
    for (const Entry& e : w.entries()) {
        if (e.pos >= a.length())
            throw std::invalid_argument("entry position " + std::to_string(e.pos) +
                                        " beyond alphabet length " +
                                        std::to_string(a.length()));
        if (e.val >= a.size(e.pos))
            throw std::invalid_argument("entry value " + std::to_string(e.val) +
                                        " too large for coordinate " +
                                        std::to_string(e.pos));
    }
}

long long weight2_count(const MixedAlphabet& a) {
    // sum_{i<j} w_i*w_j = ((sum w)^2 - sum w^2) / 2 with w_i = q_i - 1
    long long s = 0, s2 = 0;
    for (int q : a.sizes()) {
        long long w = q - 1;
        s += w;
        s2 += w * w;
    }
    return (s * s - s2) / 2;
}

std::vector<SparseWord> enumerate_weight2_words(const MixedAlphabet& a) {
    std::vector<SparseWord> out;
    out.reserve(static_cast<std::size_t>(weight2_count(a)));
    const int n = a.length();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int vi = 1; vi < a.size(i); ++vi)
                for (int vj = 1; vj < a.size(j); ++vj)
                    out.push_back(SparseWord{{i, vi}, {j, vj}});
    return out;
}

}  // namespace msts
