#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subwords/bignat.hpp"
#include "subwords/word.hpp"

namespace subwords {

/// One summary value: an arch count and the letter set of the trailing rest.
struct sig_value {
    big_nat count;
    std::uint64_t rest = 0;  ///< mask over the owning signature's universe

    /// Same-universe comparison; across universes compare through signatures.
    bool operator==(sig_value const&) const = default;
};

/// Subword universality signature of a nonempty word u.
///
/// letters() lists the distinct letters of u by first occurrence. values()[k]
/// summarizes x·u for the length-k strict suffix x of letters(): the arch
/// count and rest alphabet of x·u, taken over the letters occurring in u
/// itself (not over any wider universe). That little table is enough to
/// recover both universality indexes of u and composes across concatenation.
///
/// Masks are expressed over a universe alphabet that contains A(u) but may be
/// wider, so signatures of different words can be moved into a common index
/// space and combined.
class signature {
public:
    /// Validates shape: distinct nonempty letters, one value per strict
    /// suffix, positive counts, rest sets strictly inside A(u).
    signature(word letters, std::vector<sig_value> values);

    word const& letters() const noexcept { return letters_; }
    std::span<const sig_value> values() const noexcept { return values_; }

    /// Value for the strict suffix of letters() of the given length.
    sig_value const& value(std::size_t suffix_len) const { return values_.at(suffix_len); }

    /// Number of distinct letters of the summarized word.
    std::size_t width() const noexcept { return values_.size(); }

    alphabet const& universe() const noexcept { return letters_.alpha(); }
    alphabet_ptr const& universe_ptr() const noexcept { return letters_.alpha_ptr(); }

    /// A(u) as a mask over the universe.
    std::uint64_t alphabet_mask() const noexcept { return letters_.content_mask(); }

    /// Structural equality: same letter sequence, counts, and rest letter
    /// sets, regardless of the universes involved.
    bool operator==(signature const& other) const;

private:
    word letters_;
    std::vector<sig_value> values_;
};

/// Σ(u). Throws empty_word_error on the empty word. The word's alphabet
/// becomes the universe; counts are relative to the letters occurring in u.
signature signature_of_word(word const& u);

/// S_u(x) for any word x with the given letter set: the arch count and rest
/// alphabet of x·u over A(x·u). Absent exactly when A(u) is inside the set
/// (then x·u has the same index data as x alone would force). The mask is
/// read over the signature's universe.
std::optional<sig_value> eval(signature const& sig, std::uint64_t letters_mask);

/// Same signature over a different universe, which must contain its letters.
signature reindexed(signature const& sig, alphabet_ptr universe);

/// Σ(u·v) from Σ(u) and Σ(v) alone. Universes are unified automatically.
signature compose(signature const& left, signature const& right);

/// ι of the summarized word, over its own letters.
big_nat iota_from_signature(signature const& sig);

/// ζ of the summarized word, over its own letters.
big_nat zeta_from_signature(signature const& sig);

}  // namespace subwords
