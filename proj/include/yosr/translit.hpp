#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace yosr::translit {

/// Thrown in strict mode when an Arabic-block codepoint has no table entry.
struct UnmappedCodepoint : std::runtime_error {
  char32_t codepoint;
  std::size_t byte_offset;
  UnmappedCodepoint(char32_t cp, std::size_t offset);
};

/// Bijective Arabic-codepoint <-> ASCII-character mapping. Entries may only
/// be added while both sides are still unused, so round trips are safe on
/// the whole domain.
class TransliterationTable {
 public:
  TransliterationTable() = default;

  /// The standard Buckwalter scheme: 36 letters plus the short-vowel and
  /// tanween diacritics.
  static TransliterationTable buckwalter();

  void add(char32_t arabic, char ascii);

  bool strict_mode() const { return strict_; }
  void set_strict_mode(bool on) { strict_ = on; }

  std::optional<char> to_ascii(char32_t cp) const;
  std::optional<char32_t> to_arabic(char c) const;

  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<char32_t, char>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<char32_t, char>> entries_;
  std::unordered_map<char32_t, char> forward_;
  std::unordered_map<char, char32_t> backward_;
  bool strict_ = false;
};

bool in_arabic_block(char32_t cp);

/// Maps every table codepoint to its ASCII character; ASCII input passes
/// through untouched. Unmapped non-ASCII passes through unless the table is
/// strict, in which case Arabic-block codepoints raise UnmappedCodepoint.
std::string to_buckwalter(std::string_view text, const TransliterationTable& table);

/// Exact inverse of to_buckwalter on its image; unmapped characters pass
/// through.
std::string from_buckwalter(std::string_view text, const TransliterationTable& table);

}  // namespace yosr::translit
