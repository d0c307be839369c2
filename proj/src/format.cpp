#include "lexirank/format.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "lexirank/error.hpp"

namespace lexirank {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    // "-0.000" -> "0.000"
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string signed_fixed(double value, int decimals) {
    std::string s = fixed(value, decimals);
    if (s.front() != '-' && s.find_first_not_of("0.") != std::string::npos) s.insert(0, "+");
    return s;
}

std::string format_codepoint(char32_t cp) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
    return buf;
}

char32_t parse_codepoint(std::string_view text, std::size_t line) {
    if (text.size() < 3 || (text[0] != 'U' && text[0] != 'u') || text[1] != '+' || text.size() > 8)
        throw ParseError("expected U+XXXX codepoint, got '" + std::string(text) + "'", line);
    char32_t cp = 0;
    for (char ch : text.substr(2)) {
        int digit;
        if (ch >= '0' && ch <= '9') digit = ch - '0';
        else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
        else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
        else throw ParseError("bad hex digit in '" + std::string(text) + "'", line);
        cp = cp * 16 + static_cast<char32_t>(digit);
    }
    if (cp > 0x10FFFF) throw ParseError("codepoint out of range: " + std::string(text), line);
    return cp;
}

}  // namespace lexirank
