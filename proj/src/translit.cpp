#include "yosr/translit.hpp"

#include "yosr/utf8.hpp"

namespace yosr::translit {

UnmappedCodepoint::UnmappedCodepoint(char32_t cp, std::size_t offset)
    : std::runtime_error("unmapped Arabic codepoint '" + utf8::encode(std::u32string(1, cp)) +
                         "' (U+" + [cp] {
                           char buf[16];
                           std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
                           return std::string(buf);
                         }() + ") at byte " + std::to_string(offset)),
      codepoint(cp),
      byte_offset(offset) {}

void TransliterationTable::add(char32_t arabic, char ascii) {
  if (forward_.count(arabic) || backward_.count(ascii))
    throw std::invalid_argument("transliteration entry would break bijectivity");
  entries_.emplace_back(arabic, ascii);
  forward_.emplace(arabic, ascii);
  backward_.emplace(ascii, arabic);
}

std::optional<char> TransliterationTable::to_ascii(char32_t cp) const {
  auto it = forward_.find(cp);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<char32_t> TransliterationTable::to_arabic(char c) const {
  auto it = backward_.find(c);
  if (it == backward_.end()) return std::nullopt;
  return it->second;
}

TransliterationTable TransliterationTable::buckwalter() {
  static const std::pair<char32_t, char> kEntries[] = {
      {0x0621, '\''},  // hamza
      {0x0622, '|'},   // alif madda
      {0x0623, '>'},   // alif hamza above
      {0x0624, '&'},   // waw hamza
      {0x0625, '<'},   // alif hamza below
      {0x0626, '}'},   // yeh hamza
      {0x0627, 'A'},   // alif
      {0x0628, 'b'},   // beh
      {0x0629, 'p'},   // teh marbuta
      {0x062A, 't'},   // teh
      {0x062B, 'v'},   // theh
      {0x062C, 'j'},   // jeem
      {0x062D, 'H'},   // hah
      {0x062E, 'x'},   // khah
      {0x062F, 'd'},   // dal
      {0x0630, '*'},   // thal
      {0x0631, 'r'},   // reh
      {0x0632, 'z'},   // zain
      {0x0633, 's'},   // seen
      {0x0634, '$'},   // sheen
      {0x0635, 'S'},   // sad
      {0x0636, 'D'},   // dad
      {0x0637, 'T'},   // tah
      {0x0638, 'Z'},   // zah
      {0x0639, 'E'},   // ain
      {0x063A, 'g'},   // ghain
      {0x0640, '_'},   // tatweel
      {0x0641, 'f'},   // feh
      {0x0642, 'q'},   // qaf
      {0x0643, 'k'},   // kaf
      {0x0644, 'l'},   // lam
      {0x0645, 'm'},   // meem
      {0x0646, 'n'},   // noon
      {0x0647, 'h'},   // heh
      {0x0648, 'w'},   // waw
      {0x0649, 'Y'},   // alif maksura
      {0x064A, 'y'},   // yeh
      {0x064B, 'F'},   // fathatan
      {0x064C, 'N'},   // dammatan
      {0x064D, 'K'},   // kasratan
      {0x064E, 'a'},   // fatha
      {0x064F, 'u'},   // damma
      {0x0650, 'i'},   // kasra
      {0x0651, '~'},   // shadda
      {0x0652, 'o'},   // sukun
  };
  TransliterationTable table;
  for (auto [cp, c] : kEntries) table.add(cp, c);
  return table;
}

bool in_arabic_block(char32_t cp) {
  return (cp >= 0x0600 && cp <= 0x06FF) || (cp >= 0x0750 && cp <= 0x077F) ||
         (cp >= 0x08A0 && cp <= 0x08FF) || (cp >= 0xFB50 && cp <= 0xFDFF) ||
         (cp >= 0xFE70 && cp <= 0xFEFF);
}

std::string to_buckwalter(std::string_view text, const TransliterationTable& table) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    const char32_t cp = utf8::next_codepoint(text, pos);
    if (auto ascii = table.to_ascii(cp)) {
      out.push_back(*ascii);
    } else if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (table.strict_mode() && in_arabic_block(cp)) {
      throw UnmappedCodepoint(cp, start);
    } else {
      utf8::append(out, cp);
    }
  }
  return out;
}

std::string from_buckwalter(std::string_view text, const TransliterationTable& table) {
  std::string out;
  out.reserve(text.size() * 2);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::next_codepoint(text, pos);
    if (cp < 0x80) {
      if (auto arabic = table.to_arabic(static_cast<char>(cp))) {
        utf8::append(out, *arabic);
        continue;
      }
    }
    utf8::append(out, cp);
  }
  return out;
}

}  // namespace yosr::translit
