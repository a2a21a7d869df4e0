#pragma once

#include <string>
#include <string_view>

namespace subwords {

/// Widens raw bytes to UTF-8 by mapping byte b to code point U+00b. Keeps
/// JSON output valid for arbitrary letter bytes; ASCII stays unchanged.
std::string latin1_widen(std::string_view bytes);

/// Inverse of latin1_widen. Throws subwords::error on malformed UTF-8 or on
/// code points above U+00FF.
std::string latin1_narrow(std::string_view utf8);

}  // namespace subwords
