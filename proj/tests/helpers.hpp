#pragma once

// Shared helpers for the unit tests: word construction shorthands and
// exhaustive enumeration of words over a small letter set.

#include <string>
#include <string_view>
#include <vector>

#include "subwords/word.hpp"

namespace testhelpers {

inline subwords::word w(std::string_view text) { return subwords::word::from_bytes(text); }

inline subwords::word w(std::string_view text, std::string_view letters) {
    return subwords::word::from_bytes(text, subwords::alphabet::make(letters));
}

/// Calls fn(text) for every word over `letters` with length in [0, max_len],
/// shortest first, letters cycling fastest at the right.
template <typename Fn>
void for_each_word(std::string_view letters, std::size_t max_len, Fn&& fn) {
    std::string text;
    fn(std::string_view(text));
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        text.assign(len, letters[0]);
        while (true) {
            fn(std::string_view(text));
            std::size_t p = len;
            bool done = false;
            while (p > 0) {
                --p;
                if (++digits[p] < letters.size()) {
                    text[p] = letters[digits[p]];
                    break;
                }
                digits[p] = 0;
                text[p] = letters[0];
                if (p == 0) done = true;
            }
            if (done) break;
        }
    }
}

}  // namespace testhelpers
