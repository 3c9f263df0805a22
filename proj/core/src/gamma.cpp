#include "eqc/gamma.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace eqc {

namespace {

using u128 = unsigned __int128;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Gamma Gamma::parse(std::string_view text) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument("gamma \"" + std::string(text) + "\": " + why);
    };

    std::string_view s = text;
    auto dot = s.find('.');
    if (dot == std::string_view::npos)
        fail("expected a decimal literal like 0.95");
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);

    if (!int_part.empty() && !all_digits(int_part))
        fail("integer part must be digits only");
    if (!all_digits(frac_part))
        fail("fractional part must be digits only (no exponent)");
    if (frac_part.size() > 18)
        fail("at most 18 fractional digits supported");

    // Anything with a nonzero integer part is outside (0,1).
    for (char c : int_part) {
        if (c != '0') fail("value must lie strictly between 0 and 1");
    }

    std::uint64_t num = 0;
    std::uint64_t den = 1;
    for (char c : frac_part) {
        num = num * 10 + static_cast<std::uint64_t>(c - '0');
        den *= 10;
    }
    if (num == 0) fail("value must lie strictly between 0 and 1");

    Gamma g;
    std::uint64_t d = std::gcd(num, den);
    g.num_ = num / d;
    g.den_ = den / d;
    g.text_ = std::string(text);
    return g;
}

Gamma::Gamma(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num == 0 || num >= den)
        throw std::invalid_argument("gamma fraction must satisfy 0 < num < den");
    std::uint64_t d = std::gcd(num, den);
    num_ = num / d;
    den_ = den / d;
    text_ = std::to_string(num_) + "/" + std::to_string(den_);
}

bool Gamma::meets_threshold(std::uint64_t edges, std::uint64_t size) const {
    if (size < 2) return true;
    u128 lhs = u128(edges) * den_ * 2;
    u128 rhs = u128(num_) * size * (size - 1);
    return lhs >= rhs;
}

std::uint64_t Gamma::max_missing(std::uint64_t size) const {
    u128 t = u128(den_ - num_) * pair_count(size);
    return static_cast<std::uint64_t>(t / den_);
}

std::uint64_t Gamma::required_edges(std::uint64_t size) const {
    return pair_count(size) - max_missing(size);
}

} // namespace eqc
