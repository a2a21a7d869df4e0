#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subwords {

/// Base class for every domain error raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Alphabet construction rejected: empty, more than 64 letters, or duplicates.
class alphabet_error : public error {
public:
    using error::error;
};

/// A word was built against an explicit alphabet that misses one of its letters.
class letter_not_in_alphabet : public error {
public:
    letter_not_in_alphabet(unsigned char letter, std::size_t position);

    unsigned char letter() const noexcept { return letter_; }
    std::size_t position() const noexcept { return position_; }

private:
    unsigned char letter_;
    std::size_t position_;
};

/// Raised by operations that are undefined on the empty word.
class empty_word_error : public error {
public:
    using error::error;
};

}  // namespace subwords
