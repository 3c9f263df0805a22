#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eqc {

// Number of unordered pairs among x items, x*(x-1)/2 without overflow for
// any x that fits in 32 bits.
constexpr std::uint64_t pair_count(std::uint64_t x) {
    if (x < 2) return 0;
    return (x % 2 == 0) ? (x / 2) * (x - 1) : x * ((x - 1) / 2);
}

// Edge density threshold in (0,1), held as an exact fraction so that
// boundary comparisons like 9 >= 0.9 * 10 never depend on float rounding.
class Gamma {
public:
    // Parses a plain decimal literal such as "0.95" or ".875" with at most
    // 18 fractional digits. Scientific notation and values outside the open
    // interval (0,1) are rejected with std::invalid_argument.
    static Gamma parse(std::string_view text);

    // Direct fraction, reduced internally. Requires 0 < num < den.
    Gamma(std::uint64_t num, std::uint64_t den);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    // True iff edges >= gamma * pair_count(size), evaluated exactly.
    bool meets_threshold(std::uint64_t edges, std::uint64_t size) const;

    // Largest number of absent edges a feasible set of the given size can
    // carry: floor((1 - gamma) * pair_count(size)). Non-decreasing in size.
    std::uint64_t max_missing(std::uint64_t size) const;

    // Minimum edge count a feasible set of the given size must reach.
    std::uint64_t required_edges(std::uint64_t size) const;

    double value() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // The literal this value was parsed from (or a num/den rendering when
    // constructed directly); used when echoing configuration in reports.
    const std::string& text() const { return text_; }

    friend bool operator==(const Gamma& a, const Gamma& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Gamma() = default;

    std::uint64_t num_ = 1;
    std::uint64_t den_ = 2;
    std::string text_;
};

} // namespace eqc
