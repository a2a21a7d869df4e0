#include "subwords/testkit.hpp"

#include <random>

namespace subwords::testkit {

namespace {
constexpr std::string_view kLetters =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+/";
}

std::string_view generator_letters() { return kLetters; }

bool is_subword(std::string_view x, std::string_view w) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < x.size() && j < w.size(); ++j)
        if (x[i] == w[j]) ++i;
    return i == x.size();
}

std::size_t iota_bruteforce(std::string_view u, std::string_view letters) {
    if (letters.empty()) throw error("bruteforce index needs a nonempty letter set");
    for (std::size_t k = 1;; ++k) {
        // Odometer over all |letters|^k candidates of length k.
        std::string candidate(k, letters[0]);
        std::vector<std::size_t> digits(k, 0);
        while (true) {
            if (!is_subword(candidate, u)) return k - 1;
            std::size_t p = k;
            while (p > 0) {
                --p;
                if (++digits[p] < letters.size()) {
                    candidate[p] = letters[digits[p]];
                    break;
                }
                digits[p] = 0;
                candidate[p] = letters[0];
                if (p == 0) goto exhausted;
            }
        }
    exhausted:;
        // Every word of length k embedded; k can never exceed |u|, so the
        // loop terminates.
    }
}

std::size_t iota_bruteforce(word const& u) {
    return iota_bruteforce(u.to_string(), u.alpha().letters());
}

std::size_t zeta_bruteforce(std::string_view u, std::string_view letters) {
    std::string rotated(u);
    std::size_t best = iota_bruteforce(rotated, letters);
    for (std::size_t i = 1; i < u.size(); ++i) {
        rotated = std::string(u.substr(i)) + std::string(u.substr(0, i));
        best = std::max(best, iota_bruteforce(rotated, letters));
    }
    return best;
}

std::size_t zeta_bruteforce(word const& u) {
    return zeta_bruteforce(u.to_string(), u.alpha().letters());
}

word gen_word(std::uint64_t seed, std::size_t max_len, std::size_t alphabet_size) {
    if (alphabet_size == 0 || alphabet_size > kLetters.size())
        throw error("generator alphabet size must be between 1 and 64");
    std::mt19937_64 rng(seed);
    alphabet_ptr alpha = alphabet::make(kLetters.substr(0, alphabet_size));
    const std::uint64_t span = static_cast<std::uint64_t>(max_len) + 1;
    std::size_t len = static_cast<std::size_t>(span == 0 ? rng() : rng() % span);
    std::vector<std::uint8_t> indices(len);
    for (auto& idx : indices) idx = static_cast<std::uint8_t>(rng() % alphabet_size);
    return word::from_indices(std::move(indices), std::move(alpha));
}

slp gen_slp(std::uint64_t seed, std::size_t max_rules, std::size_t alphabet_size,
            std::uint64_t max_expansion) {
    if (alphabet_size == 0 || alphabet_size > kLetters.size())
        throw error("generator alphabet size must be between 1 and 64");
    if (max_rules == 0) throw error("generator needs room for at least one rule");
    std::mt19937_64 rng(seed);
    const std::size_t n_rules = 1 + static_cast<std::size_t>(rng() % max_rules);

    slp_builder builder;
    std::vector<std::uint64_t> lengths;  // saturated; exact values are not needed here
    constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;
    auto add_leaf = [&] {
        builder.leaf(
            static_cast<unsigned char>(kLetters[static_cast<std::size_t>(rng() % alphabet_size)]));
        lengths.push_back(1);
    };
    // Half the picks take the longest rule so far, so lengths snowball toward
    // the cap instead of staying stuck near the leaves; resampling keeps them
    // under it.
    std::size_t longest = 0;
    auto pick_operand = [&]() -> std::size_t {
        return rng() % 2 == 0 ? longest : static_cast<std::size_t>(rng() % lengths.size());
    };
    auto try_concat = [&]() -> bool {
        for (int attempt = 0; attempt < 16; ++attempt) {
            std::size_t left = pick_operand();
            std::size_t right = pick_operand();
            std::uint64_t total = std::min(kSaturated, lengths[left] + lengths[right]);
            if (max_expansion != 0 && total > max_expansion) continue;
            builder.concat(left, right);
            lengths.push_back(total);
            if (total > lengths[longest]) longest = lengths.size() - 1;
            return true;
        }
        return false;
    };

    bool root_is_leaf = true;
    for (std::size_t i = 0; i < n_rules; ++i) {
        bool want_leaf = i == 0 || (rng() % 10) < 3;
        root_is_leaf = want_leaf || !try_concat();
        if (root_is_leaf) add_leaf();
    }
    // Prefer a concatenation at the root so expansions stay interesting.
    if (root_is_leaf && lengths.size() >= 2 && lengths.size() < max_rules) try_concat();
    return builder.finish();
}

}  // namespace subwords::testkit
