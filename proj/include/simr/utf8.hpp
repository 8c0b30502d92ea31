#ifndef SIMR_UTF8_HPP
#define SIMR_UTF8_HPP

#include <string>
#include <string_view>

namespace simr {

// Decodes UTF-8 to Unicode scalar values; invalid sequences become U+FFFD.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);

// ASCII + Latin-1 lower-casing; other scripts pass through unchanged.
char32_t fold_char(char32_t c);
std::u32string fold(std::u32string_view s);

}  // namespace simr

#endif
