#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "subwords/word.hpp"

namespace subwords {

/// Leftmost greedy decomposition u = s_1 ... s_m r.
///
/// Each arch s_k is the shortest rich prefix of what follows (so its last
/// letter occurs in it exactly once) and the rest r is incomplete. lambdas
/// holds the cumulative arch ends 0 < λ_1 < ... < λ_m.
struct arch_factorization {
    std::vector<std::size_t> lambdas;
    std::size_t rest_start = 0;  ///< λ_m, or 0 when there is no arch
    std::size_t source_len = 0;

    std::size_t arch_count() const noexcept { return lambdas.size(); }
    std::size_t rest_length() const noexcept { return source_len - rest_start; }
    bool rest_empty() const noexcept { return rest_start == source_len; }

    /// Cut bounds of the k-th arch, k in [0, arch_count()).
    std::pair<std::size_t, std::size_t> arch_bounds(std::size_t k) const;
};

/// Right-to-left counterpart: u = r' s'_1 ... s'_m.
///
/// Each co-arch s'_k is rich with a first letter that occurs in it exactly
/// once, and the leading rest r' is incomplete. Equivalent to arch-factorizing
/// the mirror of u and reflecting all positions back. starts holds the co-arch
/// start cuts in increasing order.
struct coarch_factorization {
    std::vector<std::size_t> starts;
    std::size_t rest_end = 0;  ///< end cut of r'; equals source_len when m = 0
    std::size_t source_len = 0;

    std::size_t coarch_count() const noexcept { return starts.size(); }
    bool rest_empty() const noexcept { return rest_end == 0; }

    /// Cut bounds of the k-th co-arch, k in [0, coarch_count()).
    std::pair<std::size_t, std::size_t> coarch_bounds(std::size_t k) const;
};

arch_factorization arch_factorize(word const& u);
coarch_factorization coarch_factorize(word const& u);

/// α(i): the least cut j with u(i,j) rich, if any.
std::optional<std::size_t> alpha(word const& u, std::size_t i);

/// β(j): the greatest cut i with u(i,j) rich, if any.
std::optional<std::size_t> beta(word const& u, std::size_t j);

/// α iterated n times starting from cut i; α^0(i) = i.
std::optional<std::size_t> alpha_iter(word const& u, std::size_t i, std::size_t n);

/// Jump tables with one entry per cut, for exhaustive checks.
std::vector<std::optional<std::size_t>> alpha_table(word const& u);
std::vector<std::optional<std::size_t>> beta_table(word const& u);

}  // namespace subwords
