#pragma once

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qrag {

/// Exact rational with canonical form (reduced, positive denominator).
/// Used for competitive ratios and frequencies, which must not be floats.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Ratio& a, const Ratio& b) = default;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Decimal rendering with exactly six fractional digits (report format).
    std::string to_decimal6() const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", to_double());
        return std::string(buf);
    }
};

/// Smallest r with r*r >= n, in exact integer arithmetic.
inline std::size_t int_sqrt_ceil(std::size_t n) {
    if (n == 0) return 0;
    std::size_t r = static_cast<std::size_t>(__builtin_sqrt(static_cast<double>(n)));
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    while (r * r < n) ++r;
    return r;
}

/// ceil(log2(n)) for n >= 1; 0 for n = 1.
inline std::size_t ceil_log2(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ceil_log2: n must be positive");
    std::size_t bits = 0;
    std::size_t v = n - 1;
    while (v > 0) {
        v >>= 1;
        ++bits;
    }
    return bits;
}

}  // namespace qrag
