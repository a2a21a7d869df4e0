#include "subwords/arch.hpp"

#include <algorithm>
#include <stdexcept>

namespace subwords {

std::pair<std::size_t, std::size_t> arch_factorization::arch_bounds(std::size_t k) const {
    if (k >= lambdas.size()) throw std::out_of_range("arch index out of range");
    return {k == 0 ? 0 : lambdas[k - 1], lambdas[k]};
}

std::pair<std::size_t, std::size_t> coarch_factorization::coarch_bounds(std::size_t k) const {
    if (k >= starts.size()) throw std::out_of_range("co-arch index out of range");
    return {starts[k], k + 1 < starts.size() ? starts[k + 1] : source_len};
}

arch_factorization arch_factorize(word const& u) {
    arch_factorization out;
    out.source_len = u.size();
    const std::uint64_t full = u.alpha().full_mask();
    std::uint64_t seen = 0;
    for (std::size_t p = 0; p < u.size(); ++p) {
        seen |= std::uint64_t{1} << u[p];
        if (seen == full) {
            out.lambdas.push_back(p + 1);
            seen = 0;
        }
    }
    out.rest_start = out.lambdas.empty() ? 0 : out.lambdas.back();
    return out;
}

coarch_factorization coarch_factorize(word const& u) {
    coarch_factorization out;
    out.source_len = u.size();
    const std::uint64_t full = u.alpha().full_mask();
    std::uint64_t seen = 0;
    for (std::size_t p = u.size(); p-- > 0;) {
        seen |= std::uint64_t{1} << u[p];
        if (seen == full) {
            out.starts.push_back(p);
            seen = 0;
        }
    }
    std::reverse(out.starts.begin(), out.starts.end());
    out.rest_end = out.starts.empty() ? u.size() : out.starts.front();
    return out;
}

std::optional<std::size_t> alpha(word const& u, std::size_t i) {
    if (i > u.size()) throw std::out_of_range("cut out of range");
    const std::uint64_t full = u.alpha().full_mask();
    std::uint64_t seen = 0;
    for (std::size_t p = i; p < u.size(); ++p) {
        seen |= std::uint64_t{1} << u[p];
        if (seen == full) return p + 1;
    }
    return std::nullopt;
}

std::optional<std::size_t> beta(word const& u, std::size_t j) {
    if (j > u.size()) throw std::out_of_range("cut out of range");
    const std::uint64_t full = u.alpha().full_mask();
    std::uint64_t seen = 0;
    for (std::size_t p = j; p-- > 0;) {
        seen |= std::uint64_t{1} << u[p];
        if (seen == full) return p;
    }
    return std::nullopt;
}

std::optional<std::size_t> alpha_iter(word const& u, std::size_t i, std::size_t n) {
    std::optional<std::size_t> cut = i;
    if (i > u.size()) throw std::out_of_range("cut out of range");
    for (std::size_t step = 0; step < n && cut; ++step) cut = alpha(u, *cut);
    return cut;
}

std::vector<std::optional<std::size_t>> alpha_table(word const& u) {
    std::vector<std::optional<std::size_t>> table(u.size() + 1);
    for (std::size_t i = 0; i <= u.size(); ++i) table[i] = alpha(u, i);
    return table;
}

std::vector<std::optional<std::size_t>> beta_table(word const& u) {
    std::vector<std::optional<std::size_t>> table(u.size() + 1);
    for (std::size_t j = 0; j <= u.size(); ++j) table[j] = beta(u, j);
    return table;
}

}  // namespace subwords
