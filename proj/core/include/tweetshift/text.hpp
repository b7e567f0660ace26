#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tweetshift {

// Decodes the UTF-8 sequence starting at s[pos]. Returns the codepoint and
// advances pos past it. Invalid bytes decode as U+FFFD, one byte at a time.
char32_t decode_utf8(const std::string& s, std::size_t& pos);
std::string encode_utf8(char32_t cp);

// Inclusive codepoint ranges that count as emoji (plus the joiners and
// variation selectors that glue emoji sequences together).
class EmojiTable {
 public:
  static EmojiTable builtin_default();
  static EmojiTable load_csv(const std::string& path);  // start_hex,end_hex

  void add_range(char32_t lo, char32_t hi);
  bool contains(char32_t cp) const;
  bool empty() const { return ranges_.empty(); }

 private:
  std::vector<std::pair<char32_t, char32_t>> ranges_;  // sorted, merged
};

// Single-token scanners over raw tweet text. A "word char" for boundary
// purposes is ASCII alnum, '_' or any non-ASCII codepoint.
bool is_word_byte(unsigned char c);

std::string remove_urls_mentions(const std::string& text);
std::string remove_hashtags(const std::string& text);
std::string remove_emoji(const std::string& text, const EmojiTable& emoji);
std::string collapse_whitespace(const std::string& text);

// Lowercase alnum/apostrophe runs; non-ASCII bytes are kept as word bytes
// so accented words survive as single tokens.
std::vector<std::string> tokenize(const std::string& text);

// True when any codepoint of the token falls in the emoji table.
bool contains_emoji(const std::string& token, const EmojiTable& emoji);

}  // namespace tweetshift
