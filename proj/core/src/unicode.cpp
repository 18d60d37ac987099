#include "regeq/unicode.hpp"

namespace regeq::unicode {

namespace {

constexpr bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

DecodeResult decode_utf8(std::string_view text, std::size_t offset) {
  if (offset >= text.size()) return {};
  const auto b0 = static_cast<unsigned char>(text[offset]);

  if (b0 < 0x80) return {static_cast<char32_t>(b0), 1, true};
  if (b0 < 0xC2) return {};  // continuation byte or overlong 2-byte lead

  std::size_t need = 0;
  char32_t scalar = 0;
  char32_t min = 0;
  if (b0 < 0xE0) {
    need = 1;
    scalar = b0 & 0x1Fu;
    min = 0x80;
  } else if (b0 < 0xF0) {
    need = 2;
    scalar = b0 & 0x0Fu;
    min = 0x800;
  } else if (b0 < 0xF5) {
    need = 3;
    scalar = b0 & 0x07u;
    min = 0x10000;
  } else {
    return {};
  }

  if (offset + need >= text.size()) return {};  // truncated sequence
  for (std::size_t i = 1; i <= need; ++i) {
    const auto b = static_cast<unsigned char>(text[offset + i]);
    if (!is_continuation(b)) return {};
    scalar = (scalar << 6) | (b & 0x3Fu);
  }
  if (scalar < min) return {};                       // overlong
  if (scalar >= 0xD800 && scalar <= 0xDFFF) return {};  // surrogate
  if (scalar > 0x10FFFF) return {};
  return {scalar, need + 1, true};
}

void encode_utf8(char32_t scalar, std::string& out) {
  if (scalar < 0x80) {
    out.push_back(static_cast<char>(scalar));
  } else if (scalar < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (scalar >> 6)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else if (scalar < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (scalar >> 12)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (scalar >> 18)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((scalar >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (scalar & 0x3F)));
  }
}

std::string encode_utf8(char32_t scalar) {
  std::string out;
  encode_utf8(scalar, out);
  return out;
}

bool is_ascii_whitespace(char32_t scalar) {
  switch (scalar) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
      return true;
    default:
      return false;
  }
}

bool is_whitespace(char32_t scalar) {
  if (is_ascii_whitespace(scalar)) return true;
  switch (scalar) {
    case 0x0085:  // NEXT LINE
    case 0x00A0:  // NO-BREAK SPACE
    case 0x1680:  // OGHAM SPACE MARK
    case 0x2028:  // LINE SEPARATOR
    case 0x2029:  // PARAGRAPH SEPARATOR
    case 0x202F:  // NARROW NO-BREAK SPACE
    case 0x205F:  // MEDIUM MATHEMATICAL SPACE
    case 0x3000:  // IDEOGRAPHIC SPACE
      return true;
    default:
      return scalar >= 0x2000 && scalar <= 0x200A;  // EN QUAD .. HAIR SPACE
  }
}

}  // namespace regeq::unicode
