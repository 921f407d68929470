#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace yosr::utf8 {

struct DecodeError : std::runtime_error {
  std::size_t byte_offset;
  explicit DecodeError(std::size_t offset)
      : std::runtime_error("invalid UTF-8 sequence at byte " + std::to_string(offset)),
        byte_offset(offset) {}
};

/// Decodes the codepoint starting at byte `pos` and advances `pos` past it.
/// Rejects truncated sequences, overlongs, surrogates and values > U+10FFFF.
char32_t next_codepoint(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);

std::size_t length(std::string_view text);

}  // namespace yosr::utf8
