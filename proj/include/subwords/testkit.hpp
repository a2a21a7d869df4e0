#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "subwords/slp.hpp"
#include "subwords/word.hpp"

/// Reference implementations straight from the definitions, for differential
/// testing. They deliberately share no scanning logic with the main library:
/// everything here works on raw byte strings with naive loops.
namespace subwords::testkit {

/// True iff x embeds into w as a scattered subword (greedy two-pointer scan).
bool is_subword(std::string_view x, std::string_view w);

/// Universality index by definition: the largest k such that every word of
/// length k over `letters` is a subword of u. Enumerates all candidate words,
/// so callers keep |letters| <= 4 and |u| <= 24. Throws subwords::error on an
/// empty letter set.
std::size_t iota_bruteforce(std::string_view u, std::string_view letters);
std::size_t iota_bruteforce(word const& u);

/// Max of iota_bruteforce over every rotation of u.
std::size_t zeta_bruteforce(std::string_view u, std::string_view letters);
std::size_t zeta_bruteforce(word const& u);

/// Letters used by the generators; index i maps to generator_letters()[i].
std::string_view generator_letters();

/// Deterministic random word over the first alphabet_size generator letters,
/// with a length drawn uniformly from [0, max_len]. The word carries that
/// alphabet explicitly, so some letters may be missing from short draws.
word gen_word(std::uint64_t seed, std::size_t max_len, std::size_t alphabet_size);

/// Deterministic random program with 1..max_rules rules over the first
/// alphabet_size generator letters. A nonzero max_expansion bounds the
/// expansion length by construction. Output always round-trips through
/// to_text/parse_slp.
slp gen_slp(std::uint64_t seed, std::size_t max_rules, std::size_t alphabet_size,
            std::uint64_t max_expansion = 0);

}  // namespace subwords::testkit
