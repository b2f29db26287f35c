#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "msts/alphabet.hpp"

namespace msts {

/// One nonzero coordinate of a sparse word.
struct Entry {
    int pos = 0;
    int val = 0;
    auto operator<=>(const Entry&) const = default;
};

/// A word stored as its nonzero entries, sorted by position.
///
/// Zero entries are never stored, so weight() equals entries().size().
/// The sorted entry list is the canonical form; comparison and hashing
/// operate on it directly.
class SparseWord {
public:
    SparseWord() = default;
    SparseWord(std::initializer_list<Entry> entries);

    /// Sorts the entries; rejects repeated positions and values < 1.
    explicit SparseWord(std::vector<Entry> entries);

    int weight() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    auto operator<=>(const SparseWord&) const = default;

private:
    std::vector<Entry> entries_;
};

/// Number of positions where u and v differ; absent entries count as 0.
/// Symmetric, zero iff equal, and satisfies the triangle inequality.
int hamming_distance(const SparseWord& u, const SparseWord& v) noexcept;

/// True iff the weight-3 codeword c agrees with both nonzero entries of
/// the weight-2 word x, i.e. hamming_distance(x, c) == 1.
/// Throws std::invalid_argument on weight violations.
bool covers(const SparseWord& c, const SparseWord& x);

/// Throws std::invalid_argument unless every entry fits `a`:
/// position < a.length() and 1 <= value <= q_pos - 1.
void validate_word(const SparseWord& w, const MixedAlphabet& a);

/// Sum over i<j of (q_i - 1)(q_j - 1): the number of weight-2 words.
long long weight2_count(const MixedAlphabet& a);

/// Every weight-2 word over `a` exactly once, in (i, j, val_i, val_j) order.
std::vector<SparseWord> enumerate_weight2_words(const MixedAlphabet& a);

}  // namespace msts
