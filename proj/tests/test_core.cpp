#include "doctest.h"

#include <optional>
#include <stdexcept>

#include "helpers.hpp"
#include "subwords/arch.hpp"
#include "subwords/word.hpp"

using namespace subwords;
using testhelpers::for_each_word;
using testhelpers::w;

TEST_CASE("alphabet construction") {
    alphabet abc("abc");
    CHECK(abc.size() == 3);
    CHECK(abc.full_mask() == 0b111);
    CHECK(abc.index_of('b') == 1);
    CHECK(abc.index_of('z') == -1);
    CHECK(abc.mask_of("ca") == 0b101);
    CHECK(abc.letters_of_mask(0b110) == "bc");

    CHECK_THROWS_AS(alphabet(""), alphabet_error);
    CHECK_THROWS_AS(alphabet("aa"), alphabet_error);
    CHECK_THROWS_AS(alphabet(std::string(65, 'x')), alphabet_error);

    // 64 distinct letters is the cap, and its full mask saturates.
    std::string sixty_four;
    for (int i = 0; i < 64; ++i) sixty_four.push_back(static_cast<char>('0' + i));
    CHECK(alphabet(sixty_four).full_mask() == ~std::uint64_t{0});
}

TEST_CASE("alphabet inference sorts distinct bytes") {
    auto inferred = alphabet::infer("baccab");
    CHECK(inferred->letters() == "abc");
    CHECK_THROWS_AS((void)alphabet::infer(""), alphabet_error);
}

TEST_CASE("word construction and the explicit-alphabet error") {
    word u = w("baccab");
    CHECK(u.size() == 6);
    CHECK(u.to_string() == "baccab");
    CHECK(u.alpha().letters() == "abc");
    CHECK(u.is_rich());

    word incomplete = w("abc", "abcd");
    CHECK_FALSE(incomplete.is_rich());
    CHECK(incomplete.content_mask() == 0b0111);

    CHECK_THROWS_AS((void)w("abd", "abc"), letter_not_in_alphabet);
    try {
        (void)w("abd", "abc");
    } catch (letter_not_in_alphabet const& e) {
        CHECK(e.letter() == 'd');
        CHECK(e.position() == 2);
    }

    word empty = w("", "ab");
    CHECK(empty.empty());
    CHECK_THROWS_AS((void)word::from_bytes(""), alphabet_error);
}

TEST_CASE("factors, conjugates, mirror") {
    word u = w("baccabbcbaabacba");
    CHECK(u.factor(0, 3).to_string() == "bac");
    CHECK(u.factor(14, 16).to_string() == "ba");
    CHECK(u.factor(5, 5).empty());
    CHECK_THROWS_AS((void)u.factor(4, 3), std::out_of_range);
    CHECK_THROWS_AS((void)u.factor(0, 17), std::out_of_range);

    CHECK(mirror(w("aabac")).to_string() == "cabaa");
    CHECK(conjugate(w("aabaccb"), 1).to_string() == "abaccba");
    CHECK(conjugate(w("aabaccb"), 3).to_string() == "accbaab");
    CHECK(conjugate(w("abc"), 0).to_string() == "abc");
    CHECK(conjugate(w("abc"), 3).to_string() == "abc");
    CHECK_THROWS_AS((void)conjugate(w("abc"), 4), std::out_of_range);
}

TEST_CASE("first- and last-occurrence orders") {
    CHECK(first_occurrence_order(w("ccacabcbba")).to_string() == "cab");
    CHECK(last_occurrence_order(w("ccacabcbba")).to_string() == "cba");
    CHECK(first_occurrence_order(w("aabac")).to_string() == "abc");
    CHECK(last_occurrence_order(w("aabac")).to_string() == "bac");
    CHECK(first_occurrence_order(w("", "ab")).empty());
}

TEST_CASE("arch factorization of the running example") {
    word u = w("baccabbcbaabacba");
    arch_factorization af = arch_factorize(u);
    REQUIRE(af.arch_count() == 4);
    CHECK(af.lambdas == std::vector<std::size_t>{3, 6, 10, 14});
    CHECK(af.rest_start == 14);
    CHECK(af.source_len == 16);
    CHECK_FALSE(af.rest_empty());
    CHECK(af.rest_length() == 2);
    CHECK(af.arch_bounds(0) == std::pair<std::size_t, std::size_t>{0, 3});
    CHECK(af.arch_bounds(3) == std::pair<std::size_t, std::size_t>{10, 14});
    CHECK(u.factor(af.rest_start, u.size()).to_string() == "ba");

    // Each arch is rich and its last letter occurs in it exactly once.
    for (std::size_t k = 0; k < af.arch_count(); ++k) {
        auto [from, to] = af.arch_bounds(k);
        word arch = u.factor(from, to);
        CHECK(arch.is_rich());
        unsigned char last = arch.letter_at(arch.size() - 1);
        int occurrences = 0;
        for (std::size_t i = 0; i < arch.size(); ++i)
            if (arch.letter_at(i) == last) ++occurrences;
        CHECK(occurrences == 1);
    }
}

TEST_CASE("arch factorization edge cases") {
    arch_factorization none = arch_factorize(w("", "abc"));
    CHECK(none.arch_count() == 0);
    CHECK(none.rest_start == 0);
    CHECK(none.rest_empty());

    arch_factorization incomplete = arch_factorize(w("abab", "abc"));
    CHECK(incomplete.arch_count() == 0);
    CHECK(incomplete.rest_start == 0);
    CHECK(incomplete.rest_length() == 4);

    arch_factorization exact = arch_factorize(w("abcabc"));
    CHECK(exact.lambdas == std::vector<std::size_t>{3, 6});
    CHECK(exact.rest_empty());
}

TEST_CASE("co-arch factorization matches the mirror route") {
    // Oracle: arch-factorize the mirror, reflect the positions back.
    auto mirror_starts = [](word const& u) {
        arch_factorization af = arch_factorize(mirror(u));
        std::vector<std::size_t> starts;
        for (auto it = af.lambdas.rbegin(); it != af.lambdas.rend(); ++it)
            starts.push_back(u.size() - *it);
        return starts;
    };

    word pal = w("baccab");
    coarch_factorization cf = coarch_factorize(pal);
    CHECK(cf.starts == mirror_starts(pal));
    CHECK(cf.starts == std::vector<std::size_t>{0, 3});
    CHECK(cf.rest_end == 0);
    CHECK(cf.rest_empty());
    CHECK(pal.factor(cf.coarch_bounds(0).first, cf.coarch_bounds(0).second).to_string() == "bac");
    CHECK(pal.factor(cf.coarch_bounds(1).first, cf.coarch_bounds(1).second).to_string() == "cab");

    coarch_factorization single = coarch_factorize(w("cab"));
    CHECK(single.coarch_count() == 1);
    CHECK(single.rest_end == 0);

    coarch_factorization empty = coarch_factorize(w("", "ab"));
    CHECK(empty.coarch_count() == 0);
    CHECK(empty.rest_end == 0);
    CHECK(empty.rest_empty());

    coarch_factorization leading = coarch_factorize(w("aba", "ab"));
    CHECK(leading.starts == std::vector<std::size_t>{1});
    CHECK(leading.rest_end == 1);
    CHECK(leading.coarch_count() == 1);
    CHECK_FALSE(leading.rest_empty());

    for_each_word("abc", 10, [&](std::string_view text) {
        if (text.empty()) return;
        word u = w(text, "abc");
        coarch_factorization got = coarch_factorize(u);
        CHECK(got.starts == mirror_starts(u));
        CHECK(got.rest_end == (got.starts.empty() ? u.size() : got.starts.front()));
    });
}

TEST_CASE("jumping function golden values") {
    word u = w("aabcbcaabc");

    // alpha: 0..7 map to 4,4,7,7,7,9,10,10; cuts 8..10 have no value.
    std::vector<std::optional<std::size_t>> expected_alpha{4, 4, 7, 7, 7, 9, 10, 10,
                                                           std::nullopt, std::nullopt,
                                                           std::nullopt};
    CHECK(alpha_table(u) == expected_alpha);

    // beta: 4..10 map to 1,1,1,4,4,5,7; cuts 0..3 have no value.
    std::vector<std::optional<std::size_t>> expected_beta{std::nullopt, std::nullopt,
                                                          std::nullopt, std::nullopt,
                                                          1, 1, 1, 4, 4, 5, 7};
    CHECK(beta_table(u) == expected_beta);

    word ab = w("ab");
    CHECK(alpha(ab, 0) == 2);
    CHECK_FALSE(alpha(ab, 1).has_value());
    CHECK(beta(ab, 2) == 0);
    CHECK_FALSE(beta(ab, 1).has_value());

    CHECK_THROWS_AS((void)alpha(ab, 3), std::out_of_range);
    CHECK_THROWS_AS((void)beta(ab, 3), std::out_of_range);
}

TEST_CASE("alpha iteration walks arch ends") {
    word abab = w("abab");
    CHECK(alpha_iter(abab, 0, 0) == 0);
    CHECK(alpha_iter(abab, 0, 1) == 2);
    CHECK(alpha_iter(abab, 0, 2) == 4);
    CHECK_FALSE(alpha_iter(abab, 0, 3).has_value());

    // The k-th arch end is the k-th alpha iterate of 0.
    word u = w("baccabbcbaabacba");
    arch_factorization af = arch_factorize(u);
    for (std::size_t k = 0; k < af.arch_count(); ++k)
        CHECK(alpha_iter(u, 0, k + 1) == af.lambdas[k]);
    CHECK_FALSE(alpha_iter(u, 0, af.arch_count() + 1).has_value());
}

TEST_CASE("jumping function laws, exhaustively") {
    // Over every word of length <= 12 on up to three letters:
    //   alpha(i) >= i + |A|, alpha is monotone, beta(alpha(i)) >= i,
    //   and alpha(beta(alpha(i))) == alpha(i).
    for (std::string_view letters : {std::string_view("a"), std::string_view("ab"),
                                     std::string_view("abc")}) {
        alphabet_ptr alpha_set = alphabet::make(letters);
        for_each_word(letters, 12, [&](std::string_view text) {
            word u = word::from_bytes(text, alpha_set);
            auto at = alpha_table(u);
            auto bt = beta_table(u);
            std::optional<std::size_t> prev;
            for (std::size_t i = 0; i <= u.size(); ++i) {
                if (at[i]) {
                    CHECK(*at[i] >= i + letters.size());
                    REQUIRE(bt[*at[i]].has_value());
                    CHECK(*bt[*at[i]] >= i);
                    REQUIRE(at[*bt[*at[i]]].has_value());
                    CHECK(*at[*bt[*at[i]]] == *at[i]);
                    if (prev) CHECK(*prev <= *at[i]);
                    prev = at[i];
                } else {
                    // Once alpha is undefined it stays undefined.
                    if (i + 1 <= u.size()) CHECK_FALSE(at[i + 1].has_value());
                }
            }
        });
    }
}

TEST_CASE("occurrence orders are mirror-dual, exhaustively") {
    for_each_word("abc", 9, [&](std::string_view text) {
        if (text.empty()) return;
        word u = w(text);
        CHECK(first_occurrence_order(mirror(u)) == mirror(last_occurrence_order(u)));
    });
}
