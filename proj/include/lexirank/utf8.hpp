#pragma once

#include <string>
#include <string_view>

namespace lexirank::utf8 {

// Strict decoder: rejects overlong forms, surrogates, values above U+10FFFF
// and truncated sequences with EncodingError.
std::u32string decode(std::string_view bytes);

bool is_valid(std::string_view bytes);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);
std::string encode(std::u32string_view text);

}  // namespace lexirank::utf8
