#pragma once

#include <cstddef>

#include "subwords/word.hpp"

namespace subwords {

/// Result of one wrap-around arch scan: the arch count of a conjugate and
/// whether its rest came out empty.
struct conjugate_iota {
    std::size_t arches = 0;
    bool rest_empty = false;

    bool operator==(conjugate_iota const&) const = default;
};

/// Subword universality index ι(u): the number of arches of u. Every word of
/// that length over the alphabet embeds into u as a scattered factor, and no
/// longer word does.
std::size_t iota(word const& u);

/// ι of the conjugate u(d,|u|)·u(0,d), computed by scanning u circularly from
/// cut d; the conjugate is never materialized. Throws std::out_of_range when
/// d exceeds |u|.
conjugate_iota iota_conjugate(word const& u, std::size_t d);

/// Circular universality index ζ(u): the maximum of ι over all conjugates.
///
/// Only cuts right after a first occurrence of a letter are scanned (at most
/// |A| of them, in increasing order starting at d = 1). Unless `exhaustive`
/// is set, two short-circuits apply: conjugate indexes differ pairwise by at
/// most one, so two distinct values settle the maximum, and a conjugate with
/// empty rest is itself maximal.
std::size_t zeta(word const& u, bool exhaustive = false);

}  // namespace subwords
