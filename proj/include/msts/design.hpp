#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "msts/word.hpp"

namespace msts {

/// Raised by the file-format parsers. Kept separate from domain errors so
/// callers can distinguish malformed input from invariant violations.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mixed alphabet plus a duplicate-free set of weight-3 codewords.
///
/// Codewords are held sorted; this canonical order is what the file
/// writer emits, which makes serialization byte-deterministic. Equality
/// compares the alphabet and the codeword set; metadata is provenance
/// only and never participates in comparisons.
class Design {
public:
    Design(MixedAlphabet alphabet, std::vector<SparseWord> codewords,
           nlohmann::ordered_json metadata = nlohmann::ordered_json::object());

    const MixedAlphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<SparseWord>& codewords() const noexcept { return codewords_; }
    const nlohmann::ordered_json& metadata() const noexcept { return metadata_; }
    std::size_t size() const noexcept { return codewords_.size(); }
    bool contains(const SparseWord& w) const;

    bool operator==(const Design& other) const {
        return alphabet_ == other.alphabet_ && codewords_ == other.codewords_;
    }

private:
    MixedAlphabet alphabet_;
    std::vector<SparseWord> codewords_;
    nlohmann::ordered_json metadata_;
};

/// JSON-lines serialization. Line 1 is the header
///   {"format":"msts-design","version":1,"alphabet":[q1,...,qn],"meta":{...}}
/// and every further line is one codeword
///   {"cw":[[pos,val],[pos,val],[pos,val]]}
/// with positions strictly ascending. UTF-8, LF line endings.
std::string to_jsonl(const Design& d);

/// Parses the format above. Throws FormatError on malformed JSON, bad
/// header, out-of-range entries, unsorted positions or duplicate lines.
Design design_from_jsonl(std::istream& in);
Design design_from_jsonl(const std::string& text);

void save_design(const Design& d, const std::filesystem::path& path);
Design load_design(const std::filesystem::path& path);

}  // namespace msts
