#include "subwords/slp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "subwords/signature.hpp"

namespace subwords {

namespace {

char const* kind_label(slp_parse_error::kind k) {
    switch (k) {
        case slp_parse_error::kind::undefined_reference: return "undefined reference";
        case slp_parse_error::kind::forward_reference: return "forward reference";
        case slp_parse_error::kind::duplicate_definition: return "duplicate definition";
        case slp_parse_error::kind::malformed_rule: return "malformed rule";
        case slp_parse_error::kind::empty_program: return "empty program";
    }
    return "parse error";
}

std::string format_parse_message(slp_parse_error::kind k, std::size_t line,
                                 std::string const& detail) {
    std::string msg = kind_label(k);
    if (line > 0) msg += " at line " + std::to_string(line);
    if (!detail.empty()) msg += ": " + detail;
    return msg;
}

bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool is_blank(char c) { return c == ' ' || c == '\t'; }

}  // namespace

slp_parse_error::slp_parse_error(kind k, std::size_t line, std::string const& detail)
    : error(format_parse_message(k, line, detail)), kind_(k), line_(line) {}

expansion_too_large::expansion_too_large(big_nat length)
    : error("expansion of length " + length.to_decimal() + " exceeds the requested bound"),
      length_(std::move(length)) {}

std::size_t slp_builder::leaf(unsigned char letter, std::string name) {
    rules_.push_back({slp::npos, slp::npos, letter});
    names_.push_back(name.empty() ? next_name() : std::move(name));
    return rules_.size() - 1;
}

std::size_t slp_builder::concat(std::size_t left, std::size_t right, std::string name) {
    const std::size_t here = rules_.size();
    if (left >= here || right >= here)
        throw error("concat rule may only reference earlier rules");
    rules_.push_back({left, right, 0});
    names_.push_back(name.empty() ? next_name() : std::move(name));
    return rules_.size() - 1;
}

slp slp_builder::finish() {
    if (rules_.empty()) throw error("a program needs at least one rule");
    std::map<std::string_view, std::size_t> seen;
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!seen.emplace(names_[i], i).second)
            throw error("rule name \"" + names_[i] + "\" repeats");
    slp out;
    out.rules_ = std::move(rules_);
    out.names_ = std::move(names_);
    rules_.clear();
    names_.clear();
    return out;
}

std::string slp_builder::next_name() { return "X" + std::to_string(rules_.size()); }

namespace {

struct raw_rule {
    std::size_t line = 0;
    std::string name;
    bool leaf = false;
    unsigned char letter = 0;
    std::string left, right;
};

// Shape of one rule line; reference resolution happens once all
// definitions are known.
raw_rule parse_line(std::string_view text, std::size_t line_no) {
    raw_rule out;
    out.line = line_no;
    std::size_t p = 0;
    auto skip_blank = [&] { while (p < text.size() && is_blank(text[p])) ++p; };
    auto take_ident = [&]() -> std::string {
        if (p >= text.size() || !ident_start(text[p]))
            throw slp_parse_error(slp_parse_error::kind::malformed_rule, line_no,
                                  "expected an identifier");
        std::size_t start = p;
        while (p < text.size() && ident_char(text[p])) ++p;
        return std::string(text.substr(start, p - start));
    };

    skip_blank();
    out.name = take_ident();
    skip_blank();
    if (p >= text.size() || text[p] != '=')
        throw slp_parse_error(slp_parse_error::kind::malformed_rule, line_no, "expected '='");
    ++p;
    skip_blank();
    if (p < text.size() && text[p] == '\'') {
        ++p;
        if (p >= text.size() || text[p] == '\'')
            throw slp_parse_error(slp_parse_error::kind::malformed_rule, line_no,
                                  "expected a letter between quotes");
        out.leaf = true;
        out.letter = static_cast<unsigned char>(text[p]);
        ++p;
        if (p >= text.size() || text[p] != '\'')
            throw slp_parse_error(slp_parse_error::kind::malformed_rule, line_no,
                                  "expected a closing quote");
        ++p;
    } else {
        out.left = take_ident();
        if (p >= text.size() || !is_blank(text[p]))
            throw slp_parse_error(slp_parse_error::kind::malformed_rule, line_no,
                                  "expected two operands");
        skip_blank();
        out.right = take_ident();
    }
    skip_blank();
    if (p != text.size())
        throw slp_parse_error(slp_parse_error::kind::malformed_rule, line_no,
                              "trailing characters after the rule");
    return out;
}

}  // namespace

slp parse_slp(std::string_view text) {
    // First pass: line shapes and definition order, catching duplicates.
    std::vector<raw_rule> rules;
    std::map<std::string, std::size_t> defined;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) break;
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t first = 0;
        while (first < line.size() && is_blank(line[first])) ++first;
        if (first == line.size() || line[first] == '#') continue;

        raw_rule rule = parse_line(line, line_no);
        auto [it, inserted] = defined.emplace(rule.name, rules.size());
        if (!inserted)
            throw slp_parse_error(slp_parse_error::kind::duplicate_definition, line_no,
                                  "\"" + rule.name + "\" is already defined");
        rules.push_back(std::move(rule));
        if (eol == std::string_view::npos) break;
    }
    if (rules.empty())
        throw slp_parse_error(slp_parse_error::kind::empty_program, 0, "no rules");

    // Second pass: resolve references against the definition order.
    slp_builder builder;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        raw_rule const& rule = rules[i];
        if (rule.leaf) {
            builder.leaf(rule.letter, rule.name);
            continue;
        }
        auto resolve = [&](std::string const& name) -> std::size_t {
            auto it = defined.find(name);
            if (it == defined.end())
                throw slp_parse_error(slp_parse_error::kind::undefined_reference, rule.line,
                                      "\"" + name + "\" is never defined");
            if (it->second >= i)
                throw slp_parse_error(slp_parse_error::kind::forward_reference, rule.line,
                                      "\"" + name + "\" is defined later");
            return it->second;
        };
        std::size_t left = resolve(rule.left);
        std::size_t right = resolve(rule.right);
        builder.concat(left, right, rule.name);
    }
    return builder.finish();
}

std::string to_text(slp const& program) {
    std::string out;
    for (std::size_t i = 0; i < program.size(); ++i) {
        slp::rule const& r = program.at(i);
        out += program.name(i);
        out += " = ";
        if (r.is_leaf()) {
            if (r.letter == '\'' || r.letter == '\n')
                throw error("leaf letter cannot be written in the text format");
            out += '\'';
            out += static_cast<char>(r.letter);
            out += '\'';
        } else {
            out += program.name(r.left);
            out += ' ';
            out += program.name(r.right);
        }
        out += '\n';
    }
    return out;
}

big_nat expansion_length(slp const& program) {
    std::vector<big_nat> lengths;
    lengths.reserve(program.size());
    for (std::size_t i = 0; i < program.size(); ++i) {
        slp::rule const& r = program.at(i);
        lengths.push_back(r.is_leaf() ? big_nat(1) : lengths[r.left] + lengths[r.right]);
    }
    return lengths.back();
}

word expand(slp const& program, std::size_t max_len) {
    big_nat total = expansion_length(program);
    if (total > big_nat(max_len)) throw expansion_too_large(std::move(total));

    std::string out;
    out.reserve(total.to_u64());
    std::vector<std::size_t> stack{program.root()};
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        slp::rule const& r = program.at(i);
        if (r.is_leaf()) {
            out.push_back(static_cast<char>(r.letter));
        } else {
            stack.push_back(r.right);
            stack.push_back(r.left);
        }
    }
    return word::from_bytes(out);
}

universality_indexes slp_indexes(slp const& program) {
    // Letters outside the root's reach do not exist for the expansion.
    std::vector<bool> reachable(program.size(), false);
    std::vector<std::size_t> stack{program.root()};
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        if (reachable[i]) continue;
        reachable[i] = true;
        slp::rule const& r = program.at(i);
        if (!r.is_leaf()) {
            stack.push_back(r.left);
            stack.push_back(r.right);
        }
    }

    bool present[256] = {};
    for (std::size_t i = 0; i < program.size(); ++i)
        if (reachable[i] && program.at(i).is_leaf()) present[program.at(i).letter] = true;
    std::string letters;
    for (unsigned v = 0; v < 256; ++v)
        if (present[v]) letters.push_back(static_cast<char>(v));
    alphabet_ptr universe = alphabet::make(letters);

    // One signature per reachable rule, lowest index first, so operands are
    // always ready; a shared universe keeps composition remap-free.
    std::vector<std::optional<signature>> sigs(program.size());
    for (std::size_t i = 0; i < program.size(); ++i) {
        if (!reachable[i]) continue;
        slp::rule const& r = program.at(i);
        if (r.is_leaf()) {
            sigs[i] = signature_of_word(
                word::from_bytes(std::string(1, static_cast<char>(r.letter)), universe));
        } else {
            sigs[i] = compose(*sigs[r.left], *sigs[r.right]);
        }
    }
    signature const& root = *sigs[program.root()];
    return {iota_from_signature(root), zeta_from_signature(root)};
}

}  // namespace subwords
