#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace lexirank {

// Fixed-point rendering, locale independent; never prints "-0.000".
std::string fixed(double value, int decimals);

// Like fixed() but with an explicit '+' on positive values ("+0.365").
std::string signed_fixed(double value, int decimals);

// "U+263A" style, at least four hex digits.
std::string format_codepoint(char32_t cp);

// Accepts "U+XXXX" (case-insensitive prefix), throws ParseError(line) otherwise.
char32_t parse_codepoint(std::string_view text, std::size_t line = 0);

}  // namespace lexirank
