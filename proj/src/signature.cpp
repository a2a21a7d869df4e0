#include "subwords/signature.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace subwords {

namespace {

void check(bool condition, char const* message) {
    if (!condition) throw error(message);
}

std::uint64_t bit_of(std::uint8_t index) { return std::uint64_t{1} << index; }

}  // namespace

signature::signature(word letters, std::vector<sig_value> values)
    : letters_(std::move(letters)), values_(std::move(values)) {
    check(!letters_.empty(), "signature letters must not be empty");
    check(values_.size() == letters_.size(), "signature needs one value per strict suffix");
    std::uint64_t seen = 0;
    for (std::uint8_t idx : letters_.letters()) {
        check(!(seen & bit_of(idx)), "signature letters must be distinct");
        seen |= bit_of(idx);
    }
    const std::uint64_t amask = letters_.content_mask();
    for (sig_value const& v : values_) {
        check(!v.count.is_zero(), "signature counts are positive");
        check((v.rest & ~amask) == 0 && v.rest != amask,
              "signature rest sets sit strictly inside the word's letters");
    }
}

bool signature::operator==(signature const& other) const {
    if (values_.size() != other.values_.size()) return false;
    if (!(letters_ == other.letters_)) return false;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k].count != other.values_[k].count) return false;
        if (universe().letters_of_mask(values_[k].rest) !=
            other.universe().letters_of_mask(other.values_[k].rest))
            return false;
    }
    return true;
}

signature signature_of_word(word const& u) {
    if (u.empty()) throw empty_word_error("signature of the empty word is undefined");
    word e = first_occurrence_order(u);
    const std::uint64_t amask = u.content_mask();

    // values[k] summarizes x·u for the length-k suffix x of e. x has fewer
    // distinct letters than u, so no arch can close inside x; seeding the
    // scan state with x's letters is exact.
    std::vector<sig_value> values;
    values.reserve(e.size());
    std::uint64_t suffix_mask = 0;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k > 0) suffix_mask |= bit_of(e[e.size() - k]);
        std::uint64_t seen = suffix_mask;
        std::size_t count = 0;
        for (std::uint8_t idx : u.letters()) {
            seen |= bit_of(idx);
            if (seen == amask) {
                ++count;
                seen = 0;
            }
        }
        values.push_back({big_nat(count), seen});
    }
    return signature(std::move(e), std::move(values));
}

std::optional<sig_value> eval(signature const& sig, std::uint64_t letters_mask) {
    const std::uint64_t amask = sig.alphabet_mask();
    if ((amask & ~letters_mask) == 0) return std::nullopt;

    // Longest suffix y of the letter order whose letters all lie in the set;
    // only y still matters for arches once x has been read.
    word const& e = sig.letters();
    std::size_t k = 0;
    while (k < e.size() && (letters_mask & bit_of(e[e.size() - 1 - k]))) ++k;

    sig_value const& at_y = sig.value(k);
    if ((letters_mask & ~amask) == 0) return at_y;
    if (at_y.count == big_nat(1)) return at_y;
    // Foreign letters enlarge the reference alphabet: the first arch of x·u
    // swallows all of u's head start, leaving exactly one arch and rest A(u).
    return sig_value{big_nat(1), amask};
}

signature reindexed(signature const& sig, alphabet_ptr universe) {
    if (!universe) throw error("signature needs a universe alphabet");
    if (*universe == sig.universe()) {
        if (universe == sig.universe_ptr()) return sig;
        // Same letters, different object: rebuild on the shared pointer.
        std::vector<std::uint8_t> indices(sig.letters().letters().begin(),
                                          sig.letters().letters().end());
        return signature(word::from_indices(std::move(indices), std::move(universe)),
                         std::vector<sig_value>(sig.values().begin(), sig.values().end()));
    }

    alphabet const& from = sig.universe();
    std::vector<std::uint8_t> indices;
    indices.reserve(sig.width());
    for (std::uint8_t idx : sig.letters().letters()) {
        int mapped = universe->index_of(from.letter(idx));
        if (mapped < 0)
            throw letter_not_in_alphabet(from.letter(idx), indices.size());
        indices.push_back(static_cast<std::uint8_t>(mapped));
    }

    auto remap = [&](std::uint64_t mask) {
        std::uint64_t out = 0;
        for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
            auto idx = static_cast<std::size_t>(std::countr_zero(bits));
            out |= bit_of(static_cast<std::uint8_t>(universe->index_of(from.letter(idx))));
        }
        return out;
    };

    std::vector<sig_value> values;
    values.reserve(sig.width());
    for (sig_value const& v : sig.values()) values.push_back({v.count, remap(v.rest)});
    return signature(word::from_indices(std::move(indices), std::move(universe)),
                     std::move(values));
}

signature compose(signature const& left, signature const& right) {
    signature const* u = &left;
    signature const* v = &right;
    std::optional<signature> u_mapped, v_mapped;
    if (left.universe_ptr() != right.universe_ptr() && !(left.universe() == right.universe())) {
        std::string merged(left.universe().letters());
        merged += right.universe().letters();
        std::sort(merged.begin(), merged.end(), [](char a, char b) {
            return static_cast<unsigned char>(a) < static_cast<unsigned char>(b);
        });
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        alphabet_ptr common = alphabet::make(merged);
        u_mapped = reindexed(left, common);
        v_mapped = reindexed(right, common);
        u = &*u_mapped;
        v = &*v_mapped;
    }

    const std::uint64_t a_u = u->alphabet_mask();
    const std::uint64_t a_v = v->alphabet_mask();

    std::vector<std::uint8_t> order(u->letters().letters().begin(),
                                    u->letters().letters().end());
    for (std::uint8_t idx : v->letters().letters())
        if (!(a_u & bit_of(idx))) order.push_back(idx);
    word e_uv = word::from_indices(std::move(order), u->universe_ptr());

    const std::size_t n = e_uv.size();
    std::vector<sig_value> values;
    values.reserve(n);
    std::uint64_t x_mask = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) x_mask |= bit_of(e_uv[n - k]);
        if (a_v & ~(x_mask | a_u)) {
            // The tail of x·u·v still misses letters of v, so every arch
            // boundary after the first lies inside v: defer to its summary.
            auto from_v = eval(*v, x_mask | a_u);
            if (!from_v) throw std::logic_error("signature compose: right summary missing");
            values.push_back(*from_v);
        } else {
            auto from_u = eval(*u, x_mask);
            if (!from_u) throw std::logic_error("signature compose: left summary missing");
            if ((a_v | from_u->rest) != (x_mask | a_u)) {
                // v cannot complete the dangling rest of x·u: the arch count
                // stays, the rest just absorbs v's letters.
                values.push_back({from_u->count, a_v | from_u->rest});
            } else {
                auto tail = eval(*v, from_u->rest);
                if (!tail) throw std::logic_error("signature compose: tail summary missing");
                values.push_back({from_u->count + tail->count, tail->rest});
            }
        }
    }
    return signature(std::move(e_uv), std::move(values));
}

big_nat iota_from_signature(signature const& sig) { return sig.value(0).count; }

big_nat zeta_from_signature(signature const& sig) {
    sig_value const& whole = sig.value(0);
    big_nat const& m = whole.count;
    if (whole.rest == 0) return m;  // empty rest: the word itself is maximal

    // ζ exceeds ι exactly when some first-occurrence suffix x closes m+1
    // arches in x·u and ends inside a rest made of x's own letters.
    const big_nat bumped = m + big_nat(1);
    word const& e = sig.letters();
    std::uint64_t x_mask = 0;
    for (std::size_t k = 1; k < sig.width(); ++k) {
        x_mask |= std::uint64_t{1} << e[e.size() - k];
        sig_value const& v = sig.value(k);
        if (v.count == bumped && (x_mask & ~v.rest) == 0) return bumped;
    }
    return m;
}

}  // namespace subwords
