#include "tweetshift/text.hpp"

#include <algorithm>
#include <cctype>

#include "tweetshift/errors.hpp"
#include "tweetshift/io.hpp"

namespace tweetshift {

char32_t decode_utf8(const std::string& s, std::size_t& pos) {
  const unsigned char b0 = static_cast<unsigned char>(s[pos]);
  std::size_t len;
  char32_t cp;
  if (b0 < 0x80) {
    ++pos;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + len > s.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += len;
  return cp;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

EmojiTable EmojiTable::builtin_default() {
  EmojiTable t;
  t.add_range(0x200D, 0x200D);    // zero-width joiner
  t.add_range(0x2600, 0x27BF);    // misc symbols + dingbats
  t.add_range(0x2B50, 0x2B55);    // stars, heavy circle
  t.add_range(0xFE00, 0xFE0F);    // variation selectors
  t.add_range(0x1F1E6, 0x1F1FF);  // regional indicators
  t.add_range(0x1F300, 0x1F5FF);  // symbols & pictographs
  t.add_range(0x1F600, 0x1F64F);  // emoticons
  t.add_range(0x1F680, 0x1F6FF);  // transport
  t.add_range(0x1F900, 0x1F9FF);  // supplemental symbols
  t.add_range(0x1FA70, 0x1FAFF);  // symbols extended-A
  return t;
}

EmojiTable EmojiTable::load_csv(const std::string& path) {
  EmojiTable t;
  for_each_line(path, [&](const std::string& line, std::size_t n) {
    const std::string row = trim(line);
    if (row.empty() || row[0] == '#') return;
    const auto fields = split_csv_row(row);
    if (n == 1 && !fields.empty() && to_lower(trim(fields[0])) == "start_hex")
      return;  // header
    if (fields.size() != 2) throw ParseError("emoji table row needs 2 columns", n);
    char32_t lo, hi;
    try {
      lo = static_cast<char32_t>(std::stoul(trim(fields[0]), nullptr, 16));
      hi = static_cast<char32_t>(std::stoul(trim(fields[1]), nullptr, 16));
    } catch (const std::exception&) {
      throw ParseError("bad hex codepoint in emoji table", n);
    }
    if (hi < lo) throw ParseError("emoji range end below start", n);
    t.add_range(lo, hi);
  });
  return t;
}

void EmojiTable::add_range(char32_t lo, char32_t hi) {
  ranges_.emplace_back(lo, hi);
  std::sort(ranges_.begin(), ranges_.end());
  // merge overlaps so lookup stays a single binary search
  std::vector<std::pair<char32_t, char32_t>> merged;
  for (const auto& r : ranges_) {
    if (!merged.empty() && r.first <= merged.back().second + 1) {
      merged.back().second = std::max(merged.back().second, r.second);
    } else {
      merged.push_back(r);
    }
  }
  ranges_ = std::move(merged);
}

bool EmojiTable::contains(char32_t cp) const {
  auto it = std::upper_bound(
      ranges_.begin(), ranges_.end(), cp,
      [](char32_t v, const std::pair<char32_t, char32_t>& r) { return v < r.first; });
  if (it == ranges_.begin()) return false;
  --it;
  return cp >= it->first && cp <= it->second;
}

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

namespace {

bool starts_url(const std::string& s, std::size_t i) {
  auto has = [&](const char* p) {
    std::size_t n = 0;
    while (p[n]) {
      if (i + n >= s.size()) return false;
      if (std::tolower(static_cast<unsigned char>(s[i + n])) != p[n]) return false;
      ++n;
    }
    return true;
  };
  return has("http://") || has("https://") || has("www.");
}

}  // namespace

std::string remove_urls_mentions(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    const bool at_boundary =
        out.empty() || !is_word_byte(static_cast<unsigned char>(out.back()));
    if (at_boundary && starts_url(text, i)) {
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      continue;
    }
    if (c == '@' && at_boundary && i + 1 < text.size() &&
        is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i])))
        ++i;
      continue;
    }
    out += static_cast<char>(c);
    ++i;
  }
  return out;
}

std::string remove_hashtags(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    const bool at_boundary =
        out.empty() || !is_word_byte(static_cast<unsigned char>(out.back()));
    if (c == '#' && at_boundary && i + 1 < text.size() &&
        is_word_byte(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i])))
        ++i;
      continue;
    }
    out += static_cast<char>(c);
    ++i;
  }
  return out;
}

std::string remove_emoji(const std::string& text, const EmojiTable& emoji) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t start = i;
    const char32_t cp = decode_utf8(text, i);
    if (!emoji.contains(cp)) out.append(text, start, i - start);
  }
  return out;
}

std::string collapse_whitespace(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out += ' ';
    in_space = false;
    out += c;
  }
  return out;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c == '\'' || c >= 0x80) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

bool contains_emoji(const std::string& token, const EmojiTable& emoji) {
  std::size_t i = 0;
  while (i < token.size()) {
    if (emoji.contains(decode_utf8(token, i))) return true;
  }
  return false;
}

}  // namespace tweetshift
