#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "subwords/errors.hpp"

namespace subwords {

class alphabet;
using alphabet_ptr = std::shared_ptr<const alphabet>;

/// An ordered reference alphabet of at most 64 byte letters.
///
/// Letter sets over an alphabet are 64-bit masks: bit i stands for letter(i).
/// Every factorization and index in this library is taken relative to such a
/// reference alphabet; a word is "rich" when it contains all of its letters.
class alphabet {
public:
    static constexpr std::size_t max_size = 64;

    /// Keeps the letters in the order given. Throws alphabet_error on empty
    /// input, duplicates, or more than 64 letters.
    explicit alphabet(std::string_view letters);

    /// Shared alphabet with the letters as given.
    static alphabet_ptr make(std::string_view letters);

    /// Shared alphabet of the distinct letters of `text`, ascending byte order.
    /// Throws alphabet_error when `text` is empty.
    static alphabet_ptr infer(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }

    /// Mask with one bit per letter; the target of every arch scan.
    std::uint64_t full_mask() const noexcept { return full_mask_; }

    bool contains(unsigned char c) const noexcept { return index_[c] >= 0; }

    /// Index of a letter, or -1 when it is not part of the alphabet.
    int index_of(unsigned char c) const noexcept { return index_[c]; }

    unsigned char letter(std::size_t i) const { return static_cast<unsigned char>(letters_.at(i)); }

    std::string_view letters() const noexcept { return letters_; }

    /// Mask of the given letters; throws letter_not_in_alphabet on a foreign one.
    std::uint64_t mask_of(std::string_view letters) const;

    /// Letters of a mask, ascending byte order.
    std::string letters_of_mask(std::uint64_t mask) const;

    bool operator==(alphabet const& other) const noexcept { return letters_ == other.letters_; }

private:
    std::string letters_;
    std::uint64_t full_mask_ = 0;
    std::array<std::int16_t, 256> index_{};
};

}  // namespace subwords
