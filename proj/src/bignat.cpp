#include "subwords/bignat.hpp"

#include <algorithm>
#include <ostream>

namespace subwords {

namespace {
// Largest power of ten in a 64-bit limb, for decimal chunking.
constexpr std::uint64_t kDecBase = 10'000'000'000'000'000'000ull;  // 10^19
constexpr unsigned kDecDigits = 19;
}  // namespace

big_nat::big_nat(std::uint64_t value) {
    if (value) limbs_.push_back(value);
}

big_nat big_nat::from_decimal(std::string_view digits) {
    if (digits.empty()) throw error("empty decimal number");
    big_nat out;
    std::size_t pos = 0;
    while (pos < digits.size()) {
        std::size_t take = std::min<std::size_t>(kDecDigits, digits.size() - pos);
        std::uint64_t chunk = 0;
        std::uint64_t scale = 1;
        for (std::size_t i = 0; i < take; ++i) {
            char c = digits[pos + i];
            if (c < '0' || c > '9')
                throw error(std::string{"invalid decimal digit '"} + c + "'");
            chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
            scale *= 10;
        }
        out *= scale;
        out += big_nat(chunk);
        pos += take;
    }
    return out;
}

big_nat big_nat::pow2(std::size_t exponent) {
    big_nat out;
    out.limbs_.assign(exponent / 64 + 1, 0);
    out.limbs_.back() = std::uint64_t{1} << (exponent % 64);
    return out;
}

std::uint64_t big_nat::to_u64() const {
    if (limbs_.size() > 1) throw error("value does not fit in 64 bits: " + to_decimal());
    return limbs_.empty() ? 0 : limbs_[0];
}

std::string big_nat::to_decimal() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint64_t> work(limbs_);
    std::string out;
    while (!work.empty()) {
        // One long division of the limb vector by 10^19.
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / kDecBase);
            rem = cur % kDecBase;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        auto chunk = static_cast<std::uint64_t>(rem);
        if (work.empty()) {
            // Leading chunk: no zero padding.
            std::string head = std::to_string(chunk);
            out.insert(0, head);
        } else {
            std::string part = std::to_string(chunk);
            out.insert(0, std::string(kDecDigits - part.size(), '0') + part);
        }
    }
    return out;
}

big_nat& big_nat::operator+=(big_nat const& rhs) {
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

big_nat& big_nat::operator*=(std::uint64_t factor) {
    if (factor == 0) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 prod = static_cast<unsigned __int128>(limb) * factor + carry;
        limb = static_cast<std::uint64_t>(prod);
        carry = prod >> 64;
    }
    if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

std::strong_ordering big_nat::operator<=>(big_nat const& rhs) const noexcept {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, big_nat const& value) {
    return os << value.to_decimal();
}

}  // namespace subwords
