#include "subwords/indexes.hpp"

#include <stdexcept>

namespace subwords {

std::size_t iota(word const& u) {
    const std::uint64_t full = u.alpha().full_mask();
    std::uint64_t seen = 0;
    std::size_t count = 0;
    for (std::size_t p = 0; p < u.size(); ++p) {
        seen |= std::uint64_t{1} << u[p];
        if (seen == full) {
            ++count;
            seen = 0;
        }
    }
    return count;
}

conjugate_iota iota_conjugate(word const& u, std::size_t d) {
    const std::size_t n = u.size();
    if (d > n) throw std::out_of_range("conjugate cut out of range");
    const std::uint64_t full = u.alpha().full_mask();
    std::uint64_t seen = 0;
    std::size_t count = 0;
    std::size_t p = d == n ? 0 : d;
    for (std::size_t t = 0; t < n; ++t) {
        seen |= std::uint64_t{1} << u[p];
        if (seen == full) {
            ++count;
            seen = 0;
        }
        if (++p == n) p = 0;
    }
    // A rest is empty exactly when the last scanned letter closed an arch.
    return {count, seen == 0};
}

std::size_t zeta(word const& u, bool exhaustive) {
    if (u.empty()) return 0;

    // Cuts right after the first occurrence of each letter; the best cut is
    // always among them, and when u is rich they all sit in the first arch.
    std::size_t candidates[64];
    std::size_t n_candidates = 0;
    std::uint64_t seen = 0;
    for (std::size_t p = 0; p < u.size(); ++p) {
        std::uint64_t bit = std::uint64_t{1} << u[p];
        if (!(seen & bit)) {
            seen |= bit;
            candidates[n_candidates++] = p + 1;
        }
    }

    std::size_t best = 0;
    std::size_t first_value = 0;
    for (std::size_t k = 0; k < n_candidates; ++k) {
        conjugate_iota ci = iota_conjugate(u, candidates[k]);
        if (ci.arches > best) best = ci.arches;
        if (!exhaustive) {
            // An empty rest makes this conjugate maximal among all of them.
            if (ci.rest_empty) return ci.arches;
            // Conjugate indexes pairwise differ by at most one, so once two
            // distinct values have shown up the larger one is the maximum.
            if (k == 0)
                first_value = ci.arches;
            else if (ci.arches != first_value)
                return best;
        }
    }
    return best;
}

}  // namespace subwords
