#include "subwords/signature_json.hpp"

#include <utility>

#include "json.hpp"
#include "subwords/latin1.hpp"

namespace subwords {

namespace {
using nlohmann::json;
}

std::string signature_to_json(signature const& sig, int indent) {
    std::string e_bytes = sig.letters().to_string();
    json entries = json::array();
    for (std::size_t k = 0; k < sig.width(); ++k) {
        sig_value const& v = sig.value(k);
        entries.push_back(json{
            {"suffix", latin1_widen(std::string_view(e_bytes).substr(e_bytes.size() - k))},
            {"count", v.count.to_decimal()},
            {"rest", latin1_widen(sig.universe().letters_of_mask(v.rest))},
        });
    }
    json out{{"e", latin1_widen(e_bytes)}, {"entries", std::move(entries)}};
    return out.dump(indent);
}

signature signature_from_json(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw error("signature JSON does not parse");
    if (!doc.is_object() || !doc.contains("e") || !doc.contains("entries"))
        throw error("signature JSON needs an object with \"e\" and \"entries\"");
    if (!doc["e"].is_string() || !doc["entries"].is_array())
        throw error("signature JSON: \"e\" must be a string and \"entries\" an array");

    std::string e_bytes = latin1_narrow(doc["e"].get<std::string>());
    if (e_bytes.empty()) throw error("signature JSON: \"e\" must not be empty");

    alphabet_ptr universe = alphabet::infer(e_bytes);
    word e = word::from_bytes(e_bytes, universe);

    json const& entries = doc["entries"];
    if (entries.size() != e_bytes.size())
        throw error("signature JSON: expected one entry per strict suffix of \"e\"");

    std::vector<sig_value> values;
    values.reserve(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        json const& item = entries[k];
        if (!item.is_object() || !item.contains("suffix") || !item.contains("count") ||
            !item.contains("rest"))
            throw error("signature JSON: entries need \"suffix\", \"count\", and \"rest\"");
        if (!item["suffix"].is_string() || !item["count"].is_string() || !item["rest"].is_string())
            throw error("signature JSON: entry fields must be strings");
        std::string suffix = latin1_narrow(item["suffix"].get<std::string>());
        if (suffix != e_bytes.substr(e_bytes.size() - k))
            throw error("signature JSON: entry " + std::to_string(k) +
                        " does not carry the length-" + std::to_string(k) + " suffix of \"e\"");
        std::string rest = latin1_narrow(item["rest"].get<std::string>());
        values.push_back({big_nat::from_decimal(item["count"].get<std::string>()),
                          universe->mask_of(rest)});
    }
    return signature(std::move(e), std::move(values));
}

}  // namespace subwords
