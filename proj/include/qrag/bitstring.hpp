#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrag {

using Bit = std::uint8_t;

/// A binary string. One byte per bit: simple, and the flat layout lets the
/// simulation take contiguous views of a string.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t len, Bit fill = 0) : bits_(len, fill) {}

    static BitString ones(std::size_t len) { return BitString(len, 1); }
    static BitString zeros(std::size_t len) { return BitString(len, 0); }

    /// Parse "0101..."; anything but '0'/'1' is an error.
    static BitString from_text(const std::string& text) {
        BitString s(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '0')
                s.bits_[i] = 0;
            else if (text[i] == '1')
                s.bits_[i] = 1;
            else
                throw std::invalid_argument("BitString: invalid character in '" + text + "'");
        }
        return s;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    Bit bit(std::size_t i) const { return bits_[i]; }  // 0-based
    void set(std::size_t i, Bit v) { bits_[i] = v ? 1 : 0; }
    void push_back(Bit v) { bits_.push_back(v ? 1 : 0); }

    const Bit* data() const { return bits_.data(); }

    std::string to_text() const {
        std::string out(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out[i] = '1';
        return out;
    }

    // Lexicographic order with the proper-prefix rule ("01" < "011"), which is
    // exactly elementwise vector comparison.
    friend bool operator==(const BitString& a, const BitString& b) = default;
    friend auto operator<=>(const BitString& a, const BitString& b) {
        return a.bits_ <=> b.bits_;
    }

private:
    std::vector<Bit> bits_;
};

}  // namespace qrag
