#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "subwords/errors.hpp"

namespace subwords {

/// Unsigned arbitrary-precision integer with little-endian 64-bit limbs.
///
/// Covers exactly what index bookkeeping needs: addition, multiplication by a
/// machine word, comparison, powers of two, and decimal conversion. Values are
/// canonical (no high zero limb; no limbs at all means zero).
class big_nat {
public:
    big_nat() = default;
    big_nat(std::uint64_t value);  // NOLINT: implicit on purpose, counts mix freely

    /// Parses a nonempty run of decimal digits. Throws subwords::error otherwise.
    static big_nat from_decimal(std::string_view digits);

    static big_nat pow2(std::size_t exponent);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool fits_u64() const noexcept { return limbs_.size() <= 1; }

    /// Throws subwords::error when the value needs more than 64 bits.
    std::uint64_t to_u64() const;

    std::string to_decimal() const;

    big_nat& operator+=(big_nat const& rhs);
    big_nat& operator*=(std::uint64_t factor);

    friend big_nat operator+(big_nat lhs, big_nat const& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend big_nat operator*(big_nat lhs, std::uint64_t factor) {
        lhs *= factor;
        return lhs;
    }

    std::strong_ordering operator<=>(big_nat const& rhs) const noexcept;
    bool operator==(big_nat const& rhs) const noexcept = default;

    friend std::ostream& operator<<(std::ostream& os, big_nat const& value);

private:
    std::vector<std::uint64_t> limbs_;
};

}  // namespace subwords
