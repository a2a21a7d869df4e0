#include "subwords/alphabet.hpp"

#include <algorithm>
#include <bit>

namespace subwords {

namespace {

std::string hex_byte(unsigned char c) {
    static constexpr char digits[] = "0123456789abcdef";
    return std::string{"0x"} + digits[c >> 4] + digits[c & 0xf];
}

std::string describe(unsigned char c) {
    if (c >= 0x21 && c <= 0x7e) return std::string{"'"} + static_cast<char>(c) + "'";
    return hex_byte(c);
}

}  // namespace

letter_not_in_alphabet::letter_not_in_alphabet(unsigned char letter, std::size_t position)
    : error("letter " + describe(letter) + " at position " + std::to_string(position) +
            " is not in the alphabet"),
      letter_(letter),
      position_(position) {}

alphabet::alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) throw alphabet_error("alphabet must not be empty");
    if (letters_.size() > max_size)
        throw alphabet_error("alphabet holds at most 64 letters, got " +
                             std::to_string(letters_.size()));
    index_.fill(-1);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        auto c = static_cast<unsigned char>(letters_[i]);
        if (index_[c] >= 0)
            throw alphabet_error("duplicate letter " + describe(c) + " in alphabet");
        index_[c] = static_cast<std::int16_t>(i);
    }
    full_mask_ = letters_.size() == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << letters_.size()) - 1;
}

alphabet_ptr alphabet::make(std::string_view letters) {
    return std::make_shared<const alphabet>(letters);
}

alphabet_ptr alphabet::infer(std::string_view text) {
    if (text.empty())
        throw alphabet_error("cannot infer an alphabet from an empty word; supply one");
    bool present[256] = {};
    for (char c : text) present[static_cast<unsigned char>(c)] = true;
    std::string distinct;
    for (unsigned v = 0; v < 256; ++v)
        if (present[v]) distinct.push_back(static_cast<char>(v));
    return make(distinct);
}

std::uint64_t alphabet::mask_of(std::string_view letters) const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        auto c = static_cast<unsigned char>(letters[i]);
        int idx = index_[c];
        if (idx < 0) throw letter_not_in_alphabet(c, i);
        mask |= std::uint64_t{1} << idx;
    }
    return mask;
}

std::string alphabet::letters_of_mask(std::uint64_t mask) const {
    std::string out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for (std::uint64_t bits = mask & full_mask_; bits; bits &= bits - 1)
        out.push_back(letters_[static_cast<std::size_t>(std::countr_zero(bits))]);
    std::sort(out.begin(), out.end(),
              [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
    return out;
}

}  // namespace subwords
