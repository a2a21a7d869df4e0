#include "subwords/latin1.hpp"

#include "subwords/errors.hpp"

namespace subwords {

std::string latin1_widen(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    for (char ch : bytes) {
        auto b = static_cast<unsigned char>(ch);
        if (b < 0x80) {
            out.push_back(static_cast<char>(b));
        } else {
            out.push_back(static_cast<char>(0xc0 | (b >> 6)));
            out.push_back(static_cast<char>(0x80 | (b & 0x3f)));
        }
    }
    return out;
}

std::string latin1_narrow(std::string_view utf8) {
    std::string out;
    out.reserve(utf8.size());
    for (std::size_t i = 0; i < utf8.size();) {
        auto b = static_cast<unsigned char>(utf8[i]);
        if (b < 0x80) {
            out.push_back(static_cast<char>(b));
            i += 1;
        } else if ((b & 0xe0) == 0xc0) {
            if (i + 1 >= utf8.size()) throw error("truncated UTF-8 sequence");
            auto b2 = static_cast<unsigned char>(utf8[i + 1]);
            if ((b2 & 0xc0) != 0x80) throw error("malformed UTF-8 sequence");
            unsigned cp = (static_cast<unsigned>(b & 0x1f) << 6) | (b2 & 0x3f);
            if (cp > 0xff) throw error("letter beyond U+00FF cannot be a byte");
            out.push_back(static_cast<char>(cp));
            i += 2;
        } else {
            throw error("letter beyond U+00FF cannot be a byte");
        }
    }
    return out;
}

}  // namespace subwords
