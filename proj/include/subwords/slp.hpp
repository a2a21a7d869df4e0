#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "subwords/bignat.hpp"
#include "subwords/errors.hpp"
#include "subwords/word.hpp"

namespace subwords {

/// A straight-line program: an ordered list of rules, each producing either a
/// single letter or the concatenation of two strictly earlier rules. The last
/// rule is the root; its expansion is the word the program denotes.
class slp {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    struct rule {
        std::size_t left = npos;
        std::size_t right = npos;
        unsigned char letter = 0;

        bool is_leaf() const noexcept { return left == npos; }
    };

    std::size_t size() const noexcept { return rules_.size(); }
    rule const& at(std::size_t i) const { return rules_.at(i); }
    std::string const& name(std::size_t i) const { return names_.at(i); }
    std::size_t root() const noexcept { return rules_.size() - 1; }

private:
    friend class slp_builder;
    slp() = default;

    std::vector<rule> rules_;
    std::vector<std::string> names_;
};

/// Incremental, validated construction. Rule names default to X1, X2, ...
class slp_builder {
public:
    /// Adds a leaf rule; returns its index.
    std::size_t leaf(unsigned char letter, std::string name = {});

    /// Adds a concatenation of two earlier rules; returns its index.
    /// Throws subwords::error when an operand index is not strictly smaller.
    std::size_t concat(std::size_t left, std::size_t right, std::string name = {});

    /// Throws subwords::error when no rule was added or a name repeats.
    slp finish();

private:
    std::string next_name();

    std::vector<slp::rule> rules_;
    std::vector<std::string> names_;
};

/// Parse failure, carrying what went wrong and the 1-based source line
/// (0 when no line applies, as for an empty program).
class slp_parse_error : public error {
public:
    enum class kind {
        undefined_reference,
        forward_reference,
        duplicate_definition,
        malformed_rule,
        empty_program,
    };

    slp_parse_error(kind k, std::size_t line, std::string const& detail);

    kind what_kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    kind kind_;
    std::size_t line_;
};

/// Expansion would exceed the caller's bound; carries the exact length.
class expansion_too_large : public error {
public:
    explicit expansion_too_large(big_nat length);

    big_nat const& length() const noexcept { return length_; }

private:
    big_nat length_;
};

/// Parses the line-oriented text format:
///
///   # comment
///   X1 = 'a'
///   X2 = 'b'
///   X3 = X1 X2
///
/// Blank lines and lines starting with '#' are ignored. A rule is either
/// NAME = 'c' (c any byte except the quote and newline) or NAME = NAME NAME,
/// with runs of spaces or tabs allowed around tokens. Names match
/// [A-Za-z_][A-Za-z0-9_]*. References must point at earlier rules; the last
/// rule is the root.
slp parse_slp(std::string_view text);

/// Renders a program in the same text format. Throws subwords::error when a
/// leaf letter cannot be represented (quote or newline).
std::string to_text(slp const& program);

/// |exp(root)| without expanding.
big_nat expansion_length(slp const& program);

/// exp(root) as a word over its own letters. Throws expansion_too_large when
/// the expansion exceeds max_len.
word expand(slp const& program, std::size_t max_len);

struct universality_indexes {
    big_nat iota;
    big_nat zeta;
};

/// Both universality indexes of exp(root) over the letters it uses, computed
/// by composing per-rule signatures bottom-up. The expansion is never built,
/// so programs with astronomically long expansions are fine.
universality_indexes slp_indexes(slp const& program);

}  // namespace subwords
