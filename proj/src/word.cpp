#include "subwords/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace subwords {

word word::from_bytes(std::string_view text) {
    return from_bytes(text, alphabet::infer(text));
}

word word::from_bytes(std::string_view text, alphabet_ptr alpha) {
    if (!alpha) throw error("word needs an alphabet");
    std::vector<std::uint8_t> indices;
    indices.reserve(text.size());
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        int idx = alpha->index_of(c);
        if (idx < 0) throw letter_not_in_alphabet(c, i);
        indices.push_back(static_cast<std::uint8_t>(idx));
        mask |= std::uint64_t{1} << idx;
    }
    return word(std::move(indices), std::move(alpha), mask);
}

word word::from_indices(std::vector<std::uint8_t> indices, alphabet_ptr alpha) {
    if (!alpha) throw error("word needs an alphabet");
    std::uint64_t mask = 0;
    for (std::uint8_t idx : indices) {
        if (idx >= alpha->size())
            throw error("letter index " + std::to_string(idx) + " outside alphabet of size " +
                        std::to_string(alpha->size()));
        mask |= std::uint64_t{1} << idx;
    }
    return word(std::move(indices), std::move(alpha), mask);
}

word word::factor(std::size_t i, std::size_t j) const {
    if (i > j || j > size()) throw std::out_of_range("word factor bounds out of range");
    return from_indices(std::vector<std::uint8_t>(letters_.begin() + static_cast<std::ptrdiff_t>(i),
                                                  letters_.begin() + static_cast<std::ptrdiff_t>(j)),
                        alpha_);
}

std::string word::to_string() const {
    std::string out;
    out.reserve(size());
    for (std::uint8_t idx : letters_) out.push_back(static_cast<char>(alpha_->letter(idx)));
    return out;
}

bool word::operator==(word const& other) const noexcept {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (alpha_->letter(letters_[i]) != other.alpha_->letter(other.letters_[i])) return false;
    return true;
}

word mirror(word const& u) {
    std::vector<std::uint8_t> rev(u.letters().rbegin(), u.letters().rend());
    return word::from_indices(std::move(rev), u.alpha_ptr());
}

word conjugate(word const& u, std::size_t i) {
    if (i > u.size()) throw std::out_of_range("conjugate cut out of range");
    std::vector<std::uint8_t> rotated;
    rotated.reserve(u.size());
    rotated.insert(rotated.end(), u.letters().begin() + static_cast<std::ptrdiff_t>(i),
                   u.letters().end());
    rotated.insert(rotated.end(), u.letters().begin(),
                   u.letters().begin() + static_cast<std::ptrdiff_t>(i));
    return word::from_indices(std::move(rotated), u.alpha_ptr());
}

word first_occurrence_order(word const& u) {
    std::uint64_t seen = 0;
    std::vector<std::uint8_t> order;
    for (std::uint8_t idx : u.letters()) {
        std::uint64_t bit = std::uint64_t{1} << idx;
        if (!(seen & bit)) {
            seen |= bit;
            order.push_back(idx);
        }
    }
    return word::from_indices(std::move(order), u.alpha_ptr());
}

word last_occurrence_order(word const& u) {
    std::uint64_t seen = 0;
    std::vector<std::uint8_t> order;
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
        std::uint64_t bit = std::uint64_t{1} << *it;
        if (!(seen & bit)) {
            seen |= bit;
            order.push_back(*it);
        }
    }
    std::reverse(order.begin(), order.end());
    return word::from_indices(std::move(order), u.alpha_ptr());
}

}  // namespace subwords
