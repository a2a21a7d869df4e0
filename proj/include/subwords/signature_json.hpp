#pragma once

#include <string>
#include <string_view>

#include "subwords/signature.hpp"

namespace subwords {

/// Serializes a signature as a JSON object:
///
///   {"e": "abc",
///    "entries": [{"suffix": "", "count": "1", "rest": ""}, ...]}
///
/// entries is ordered by suffix length; counts are decimal strings; rest
/// holds the letters of the rest set in ascending byte order. indent < 0
/// yields compact output.
std::string signature_to_json(signature const& sig, int indent = -1);

/// Parses and validates the schema above. The universe is the set of letters
/// of "e". Throws subwords::error on malformed or inconsistent input.
signature signature_from_json(std::string_view text);

}  // namespace subwords
