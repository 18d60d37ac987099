#ifndef REGEQ_UNICODE_HPP
#define REGEQ_UNICODE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace regeq::unicode {

// Result of decoding one scalar value from a UTF-8 byte stream.
struct DecodeResult {
  char32_t scalar = 0;
  std::size_t length = 0;  // bytes consumed; 0 means the input was malformed
  bool ok = false;
};

// Decodes the scalar value starting at byte `offset`. Rejects overlong
// encodings, surrogate code points, and values above U+10FFFF.
DecodeResult decode_utf8(std::string_view text, std::size_t offset);

// Appends the UTF-8 encoding of `scalar` to `out`.
void encode_utf8(char32_t scalar, std::string& out);

std::string encode_utf8(char32_t scalar);

bool is_ascii_whitespace(char32_t scalar);

// Unicode White_Space property (fixed list, Unicode 15).
bool is_whitespace(char32_t scalar);

}  // namespace regeq::unicode

#endif  // REGEQ_UNICODE_HPP
