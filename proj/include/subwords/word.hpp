#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subwords/alphabet.hpp"

namespace subwords {

/// An immutable word over a reference alphabet.
///
/// Letters are stored as indices into the alphabet. Cut positions run from 0
/// to size(); the factor u(i,j) is the letter range between cuts i and j.
/// The alphabet is shared, so copies and factors are cheap.
class word {
public:
    /// Word over the alphabet inferred from `text` (its distinct letters in
    /// ascending byte order). Throws alphabet_error when `text` is empty,
    /// since there is nothing to infer from; pass an alphabet instead.
    static word from_bytes(std::string_view text);

    /// Word over an explicit alphabet. Throws letter_not_in_alphabet when a
    /// byte of `text` is missing from it.
    static word from_bytes(std::string_view text, alphabet_ptr alpha);

    /// Word from pre-mapped letter indices.
    static word from_indices(std::vector<std::uint8_t> indices, alphabet_ptr alpha);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// Letter index at position i (unchecked).
    std::uint8_t operator[](std::size_t i) const noexcept { return letters_[i]; }

    /// Letter byte at position i.
    unsigned char letter_at(std::size_t i) const { return alpha_->letter(letters_.at(i)); }

    std::span<const std::uint8_t> letters() const noexcept { return letters_; }

    alphabet const& alpha() const noexcept { return *alpha_; }
    alphabet_ptr const& alpha_ptr() const noexcept { return alpha_; }

    /// Mask of the letters that actually occur: A(u) as a subset of the alphabet.
    std::uint64_t content_mask() const noexcept { return content_mask_; }

    /// True when every alphabet letter occurs in the word.
    bool is_rich() const noexcept { return content_mask_ == alpha_->full_mask(); }

    /// The factor u(i,j). Throws std::out_of_range unless i <= j <= size().
    word factor(std::size_t i, std::size_t j) const;

    std::string to_string() const;

    /// Letter-sequence equality; the alphabets may differ.
    bool operator==(word const& other) const noexcept;

private:
    word(std::vector<std::uint8_t> letters, alphabet_ptr alpha, std::uint64_t mask)
        : letters_(std::move(letters)), alpha_(std::move(alpha)), content_mask_(mask) {}

    std::vector<std::uint8_t> letters_;
    alphabet_ptr alpha_;
    std::uint64_t content_mask_ = 0;
};

/// The reversed word u^R.
word mirror(word const& u);

/// The conjugate u(i,|u|)·u(0,i). Throws std::out_of_range unless i <= size().
word conjugate(word const& u, std::size_t i);

/// e(u): the distinct letters of u in order of first occurrence.
word first_occurrence_order(word const& u);

/// f(u): the distinct letters of u in order of last occurrence.
word last_occurrence_order(word const& u);

}  // namespace subwords
