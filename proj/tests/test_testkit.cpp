#include "doctest.h"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "subwords/errors.hpp"
#include "subwords/slp.hpp"
#include "subwords/testkit.hpp"
#include "subwords/word.hpp"

using namespace subwords;

namespace {

// Table-filling subword check, as a second opinion on the greedy scan.
bool is_subword_dp(std::string_view x, std::string_view w) {
    std::vector<std::size_t> reach(x.size() + 1, std::string::npos);
    reach[0] = 0;  // reach[i] = least prefix of w embedding x[0,i)
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (reach[i] == std::string::npos) break;
        for (std::size_t j = reach[i]; j < w.size(); ++j) {
            if (w[j] == x[i]) {
                reach[i + 1] = j + 1;
                break;
            }
        }
    }
    return reach[x.size()] != std::string::npos;
}

}  // namespace

TEST_CASE("subword relation") {
    CHECK(testkit::is_subword("abba", "abracadabra"));
    CHECK_FALSE(testkit::is_subword("ino", "nationalists"));
    CHECK(testkit::is_subword("", "anything"));
    CHECK(testkit::is_subword("", ""));
    CHECK_FALSE(testkit::is_subword("a", ""));
    CHECK(testkit::is_subword("abc", "abc"));
    CHECK_FALSE(testkit::is_subword("abcd", "abc"));
    CHECK_FALSE(testkit::is_subword("ba", "ab"));

    std::mt19937_64 rng(12345);
    for (int round = 0; round < 2000; ++round) {
        std::string w(rng() % 16, 'a');
        for (auto& c : w) c = static_cast<char>('a' + rng() % 3);
        std::string x(rng() % 8, 'a');
        for (auto& c : x) c = static_cast<char>('a' + rng() % 3);
        CHECK(testkit::is_subword(x, w) == is_subword_dp(x, w));
    }
}

TEST_CASE("brute-force index golden values") {
    CHECK(testkit::iota_bruteforce("baccabbcbaabacba", "abc") == 4);
    CHECK(testkit::iota_bruteforce("aabcbcaabc", "abc") == 3);
    CHECK(testkit::iota_bruteforce("", "ab") == 0);
    CHECK(testkit::iota_bruteforce("abc", "abcd") == 0);
    CHECK(testkit::iota_bruteforce("aaaa", "a") == 4);
    CHECK(testkit::iota_bruteforce("ab", "ab") == 1);
    CHECK_THROWS_AS((void)testkit::iota_bruteforce("abc", ""), error);

    CHECK(testkit::zeta_bruteforce("aabb", "ab") == 2);
    CHECK(testkit::zeta_bruteforce("aabaccb", "abc") == 2);
    CHECK(testkit::zeta_bruteforce("", "ab") == 0);
    CHECK(testkit::zeta_bruteforce("abab", "abc") == 0);
    CHECK(testkit::zeta_bruteforce("aaa", "a") == 3);

    word u = word::from_bytes("aabb");
    CHECK(testkit::iota_bruteforce(u) == testkit::iota_bruteforce("aabb", "ab"));
    CHECK(testkit::zeta_bruteforce(u) == testkit::zeta_bruteforce("aabb", "ab"));
}

TEST_CASE("generator letter table") {
    std::string_view letters = testkit::generator_letters();
    CHECK(letters.size() == 64);
    bool seen[256] = {};
    for (char c : letters) {
        CHECK_FALSE(seen[static_cast<unsigned char>(c)]);
        seen[static_cast<unsigned char>(c)] = true;
    }
    CHECK(letters.substr(0, 4) == "abcd");
}

TEST_CASE("word generator") {
    word a = testkit::gen_word(42, 30, 3);
    word b = testkit::gen_word(42, 30, 3);
    CHECK(a == b);
    CHECK(a.alpha().letters() == "abc");

    bool saw_difference = false;
    bool saw_full_alphabet = false;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        word u = testkit::gen_word(seed, 30, 3);
        CHECK(u.size() <= 30);
        if (!(u == a)) saw_difference = true;
        if (u.content_mask() == u.alpha().full_mask()) saw_full_alphabet = true;
        for (std::size_t i = 0; i < u.size(); ++i)
            CHECK(u.alpha().index_of(static_cast<char>(u.letter_at(i))) >= 0);
    }
    CHECK(saw_difference);
    CHECK(saw_full_alphabet);

    CHECK(testkit::gen_word(7, 0, 2).empty());
    CHECK_THROWS_AS((void)testkit::gen_word(1, 5, 0), error);
    CHECK_THROWS_AS((void)testkit::gen_word(1, 5, 65), error);
}

TEST_CASE("program generator") {
    slp a = testkit::gen_slp(99, 20, 3);
    slp b = testkit::gen_slp(99, 20, 3);
    CHECK(to_text(a) == to_text(b));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        slp p = testkit::gen_slp(seed, 20, 3, 500);
        CHECK(p.size() >= 1);
        CHECK(p.size() <= 20);
        CHECK(expansion_length(p) <= big_nat(500));
        CHECK(to_text(parse_slp(to_text(p))) == to_text(p));
        word u = expand(p, 500);
        for (std::size_t i = 0; i < u.size(); ++i) {
            char c = static_cast<char>(u.letter_at(i));
            CHECK(testkit::generator_letters().substr(0, 3).find(c) != std::string_view::npos);
        }
    }

    CHECK_THROWS_AS((void)testkit::gen_slp(1, 0, 3), error);
    CHECK_THROWS_AS((void)testkit::gen_slp(1, 5, 0), error);
}
