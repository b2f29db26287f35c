#include "msts/design.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace msts {

using nlohmann::ordered_json;

Design::Design(MixedAlphabet alphabet, std::vector<SparseWord> codewords,
               ordered_json metadata)
    : alphabet_(std::move(alphabet)),
      codewords_(std::move(codewords)),
      metadata_(std::move(metadata)) {
    for (const SparseWord& w : codewords_) {
        if (w.weight() != 3)
            throw std::invalid_argument("design codewords must have weight 3");
        validate_word(w, alphabet_);
    }
    std::sort(codewords_.begin(), codewords_.end());
    if (std::adjacent_find(codewords_.begin(), codewords_.end()) != codewords_.end())
        throw std::invalid_argument("duplicate codeword in design");
    if (!metadata_.is_object())
        throw std::invalid_argument("design metadata must be a JSON object");
}

bool Design::contains(const SparseWord& w) const {
    return std::binary_search(codewords_.begin(), codewords_.end(), w);
}

std::string to_jsonl(const Design& d) {
    ordered_json header;
    header["format"] = "msts-design";
    header["version"] = 1;
    header["alphabet"] = d.alphabet().sizes();
    header["meta"] = d.metadata();

    std::string out = header.dump();
    out += '\n';
    for (const SparseWord& w : d.codewords()) {
        ordered_json pairs = ordered_json::array();
        for (const Entry& e : w.entries()) pairs.push_back({e.pos, e.val});
        ordered_json line;
        line["cw"] = std::move(pairs);
        out += line.dump();
        out += '\n';
    }
    return out;
}

namespace {

ordered_json parse_line(const std::string& line, std::size_t lineno) {
    try {
        return ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
}

}  // namespace

Design design_from_jsonl(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw FormatError("empty design file");

    const ordered_json header = parse_line(line, 1);
    if (!header.is_object() || header.value("format", "") != "msts-design")
        throw FormatError("missing msts-design header");
    if (header.value("version", 0) != 1)
        throw FormatError("unsupported design format version");
    if (!header.contains("alphabet") || !header["alphabet"].is_array())
        throw FormatError("header lacks an alphabet array");

    std::vector<int> sizes;
    for (const auto& q : header["alphabet"]) {
        if (!q.is_number_integer())
            throw FormatError("alphabet sizes must be integers");
        sizes.push_back(q.get<int>());
    }
    ordered_json meta = header.value("meta", ordered_json::object());
    if (!meta.is_object()) throw FormatError("meta must be a JSON object");

    MixedAlphabet alphabet = [&] {
        try {
            return MixedAlphabet(std::move(sizes));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("bad alphabet: ") + e.what());
        }
    }();

    std::vector<SparseWord> words;
    std::set<SparseWord> seen;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const ordered_json obj = parse_line(line, lineno);
        if (!obj.is_object() || !obj.contains("cw") || !obj["cw"].is_array())
            throw FormatError("line " + std::to_string(lineno) +
                              ": expected {\"cw\":[[pos,val]x3]}");
        const auto& cw = obj["cw"];
        if (cw.size() != 3)
            throw FormatError("line " + std::to_string(lineno) +
                              ": codeword must have exactly 3 entries");
        std::vector<Entry> entries;
        int prev_pos = -1;
        for (const auto& pair : cw) {
            if (!pair.is_array() || pair.size() != 2 ||
                !pair[0].is_number_integer() || !pair[1].is_number_integer())
                throw FormatError("line " + std::to_string(lineno) +
                                  ": entries must be [pos,val] integer pairs");
            Entry e{pair[0].get<int>(), pair[1].get<int>()};
            if (e.pos <= prev_pos)
                throw FormatError("line " + std::to_string(lineno) +
                                  ": positions must be strictly ascending");
            prev_pos = e.pos;
            entries.push_back(e);
        }
        SparseWord w = [&] {
            try {
                SparseWord word(std::move(entries));
                validate_word(word, alphabet);
                return word;
            } catch (const std::invalid_argument& e) {
                throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }();
        if (!seen.insert(w).second)
            throw FormatError("line " + std::to_string(lineno) + ": duplicate codeword");
        words.push_back(std::move(w));
    }
    return Design(std::move(alphabet), std::move(words), std::move(meta));
}

Design design_from_jsonl(const std::string& text) {
    std::istringstream in(text);
    return design_from_jsonl(in);
}

void save_design(const Design& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_jsonl(d);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

Design load_design(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return design_from_jsonl(in);
}

}  // namespace msts
