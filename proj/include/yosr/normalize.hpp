#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace yosr::normalize {

struct NormalizationConfig {
  bool unify_alif = true;           // hamza/madda alif forms -> bare alif
  bool teh_marbuta_to_heh = true;
  bool alif_maksura_to_yeh = true;
  bool split_waw = true;
  int waw_min_remainder = 2;        // letters required after the split, >= 1
  std::optional<std::set<std::string>> waw_lexicon;  // UTF-8 words, gate when set
};

/// Applies the enabled character rules to every occurrence. All rules are
/// one-to-one, so the codepoint length never changes and the function is
/// idempotent.
std::string normalize_chars(std::string_view text, const NormalizationConfig& cfg);

/// Detaches a leading conjunction waw when the remainder is a plausible word:
/// at least waw_min_remainder Arabic letters, and present in the lexicon when
/// one is configured. Returns the token unchanged otherwise.
std::vector<std::string> split_waw(std::string_view token, const NormalizationConfig& cfg);

/// Whitespace split with sentence punctuation (. , ! ? and the Arabic
/// question mark / comma) detached as single-character tokens.
std::vector<std::string> tokenize(std::string_view text);

bool is_punctuation(char32_t cp);
bool is_arabic_letter(char32_t cp);

}  // namespace yosr::normalize
