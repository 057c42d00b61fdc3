#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrag/bitstring.hpp"
#include "qrag/util.hpp"

namespace qrag {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using KeywordIndex = std::size_t;  // 1-based; answers outside 1..d simply never match

/// One problem input: d keywords followed by m words, all of length k.
/// The game input is their concatenation, (m+d)*k binary variables.
class Instance {
public:
    Instance() = default;
    Instance(std::vector<BitString> keywords, std::vector<BitString> words, std::size_t k)
        : keywords_(std::move(keywords)), words_(std::move(words)), k_(k) {
        validate();
    }

    std::size_t d() const { return keywords_.size(); }
    std::size_t m() const { return words_.size(); }
    std::size_t k() const { return k_; }
    std::size_t n() const { return (d() + m()) * k_; }

    const std::vector<BitString>& keywords() const { return keywords_; }
    const std::vector<BitString>& words() const { return words_; }
    const BitString& keyword(std::size_t i) const { return keywords_[i - 1]; }  // 1-based
    const BitString& word(std::size_t j) const { return words_[j - 1]; }        // 1-based

    /// Input variable x_pos for pos in 1..n: keywords first, then words.
    Bit input_bit(std::size_t pos) const {
        const std::size_t idx = (pos - 1) / k_;
        const std::size_t off = (pos - 1) % k_;
        return idx < d() ? keywords_[idx].bit(off) : words_[idx - d()].bit(off);
    }

    /// The string that covers input positions [first, first+len-1], when those
    /// positions sit inside a single keyword/word; nullptr across a boundary.
    const Bit* contiguous_bits(std::size_t first, std::size_t len) const {
        if (len == 0 || first == 0 || first + len - 1 > n()) return nullptr;
        const std::size_t idx = (first - 1) / k_;
        const std::size_t off = (first - 1) % k_;
        if (off + len > k_) return nullptr;
        const BitString& s = idx < d() ? keywords_[idx] : words_[idx - d()];
        return s.data() + off;
    }

private:
    void validate() const {
        if (k_ == 0) throw std::invalid_argument("Instance: k must be positive");
        if (keywords_.empty()) throw std::invalid_argument("Instance: need at least one keyword");
        if (words_.empty()) throw std::invalid_argument("Instance: need at least one word");
        for (const auto& s : keywords_)
            if (s.size() != k_) throw std::invalid_argument("Instance: keyword length != k");
        for (const auto& s : words_)
            if (s.size() != k_) throw std::invalid_argument("Instance: word length != k");
    }

    std::vector<BitString> keywords_;
    std::vector<BitString> words_;
    std::size_t k_ = 0;
};

/// Exact relative frequency of string t among the instance's words.
inline Ratio frequency(const Instance& inst, const BitString& t) {
    std::int64_t count = 0;
    for (const auto& w : inst.words())
        if (w == t) ++count;
    return Ratio(count, static_cast<std::int64_t>(inst.m()));
}

/// The offline optimum answer: the minimal index of a most frequent keyword,
/// by brute-force counting. All-zero frequencies still give index 1.
inline KeywordIndex offline_optimum(const Instance& inst) {
    std::size_t best_index = 1;
    std::size_t best_count = 0;
    for (std::size_t i = 1; i <= inst.d(); ++i) {
        std::size_t count = 0;
        for (const auto& w : inst.words())
            if (w == inst.keyword(i)) ++count;
        if (count > best_count) {  // strict: ties keep the smaller index
            best_count = count;
            best_index = i;
        }
    }
    return best_index;
}

/// Scores one answer per word against the offline optimum. A disengaged
/// (nullopt) answer never matches. Cost is 1 plus the number of misses.
inline std::uint64_t cost(const Instance& inst,
                          const std::vector<std::optional<KeywordIndex>>& answers) {
    if (answers.size() != inst.m())
        throw std::invalid_argument("cost: need exactly one answer per word");
    const KeywordIndex want = offline_optimum(inst);
    std::uint64_t wrong = 0;
    for (const auto& a : answers)
        if (!a.has_value() || *a != want) ++wrong;
    return 1 + wrong;
}

// ---- line format ----------------------------------------------------------
// line 1: "d m k"; then d keyword lines and m word lines of 0/1 characters.

inline void serialize(const Instance& inst, std::ostream& out) {
    out << inst.d() << ' ' << inst.m() << ' ' << inst.k() << '\n';
    for (const auto& s : inst.keywords()) out << s.to_text() << '\n';
    for (const auto& s : inst.words()) out << s.to_text() << '\n';
}

inline std::string serialize_to_string(const Instance& inst) {
    std::ostringstream os;
    serialize(inst, os);
    return os.str();
}

namespace detail {
inline std::size_t parse_count(const std::string& token, const char* what) {
    if (token.empty()) throw ParseError(std::string("missing ") + what);
    std::size_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what + ": '" + token + "'");
        if (value > (SIZE_MAX - 9) / 10) throw ParseError(std::string(what) + " out of range");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    if (value == 0) throw ParseError(std::string(what) + " must be positive");
    return value;
}
}  // namespace detail

inline Instance parse_instance(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty input");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    std::istringstream hs(header);
    std::string td, tm, tk, extra;
    hs >> td >> tm >> tk;
    if (hs >> extra) throw ParseError("header has trailing tokens");
    const std::size_t d = detail::parse_count(td, "d");
    const std::size_t m = detail::parse_count(tm, "m");
    const std::size_t k = detail::parse_count(tk, "k");
    if (k != 0 && d + m > SIZE_MAX / k) throw ParseError("instance size overflows");

    std::vector<BitString> keywords, words;
    keywords.reserve(d);
    words.reserve(m);
    for (std::size_t i = 0; i < d + m; ++i) {
        std::string line;
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(d + m) + " strings, got " +
                             std::to_string(i));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != k)
            throw ParseError("line " + std::to_string(i + 2) + ": length " +
                             std::to_string(line.size()) + ", want " + std::to_string(k));
        BitString s;
        try {
            s = BitString::from_text(line);
        } catch (const std::invalid_argument&) {
            throw ParseError("line " + std::to_string(i + 2) + ": characters must be 0/1");
        }
        (i < d ? keywords : words).push_back(std::move(s));
    }
    std::string tail;
    while (std::getline(in, tail)) {
        if (!tail.empty() && tail.back() == '\r') tail.pop_back();
        if (!tail.empty()) throw ParseError("trailing content after instance");
    }
    return Instance(std::move(keywords), std::move(words), k);
}

inline Instance parse_instance_from_string(const std::string& text) {
    std::istringstream is(text);
    return parse_instance(is);
}

}  // namespace qrag
