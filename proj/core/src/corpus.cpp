#include "tweetshift/corpus.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

#include "tweetshift/errors.hpp"
#include "tweetshift/io.hpp"

namespace tweetshift {

CleanedText clean(const std::string& raw_text, const EmojiTable& emoji) {
  CleanedText out;
  const std::string stripped = remove_urls_mentions(raw_text);
  out.sentiment_text = collapse_whitespace(stripped);
  out.clean_text = collapse_whitespace(remove_emoji(remove_hashtags(stripped), emoji));
  out.tokens = tokenize(out.clean_text);
  return out;
}

TermDictionary TermDictionary::load(const std::string& path) {
  TermDictionary d;
  for_each_line(path, [&](const std::string& line, std::size_t n) {
    if (line.rfind("# ", 0) == 0) return;  // comment
    const std::string entry = to_lower(trim(line));
    if (entry.empty()) return;
    if (entry == "#") throw ParseError("bare '#' is not a hashtag", n);
    if (entry[0] == '#') {
      d.hashtags.insert(entry);
    } else {
      d.terms.insert(entry);
    }
  });
  return d;
}

namespace {

bool boundary_before(const std::string& text, std::size_t pos) {
  return pos == 0 || !is_word_byte(static_cast<unsigned char>(text[pos - 1]));
}

bool boundary_after(const std::string& text, std::size_t pos) {
  return pos >= text.size() || !is_word_byte(static_cast<unsigned char>(text[pos]));
}

// Word-boundary occurrence of `term`, allowing a bare "s"/"es" suffix on
// the final word of the phrase.
bool phrase_occurs(const std::string& text, const std::string& term) {
  std::size_t from = 0;
  while (true) {
    const std::size_t at = text.find(term, from);
    if (at == std::string::npos) return false;
    from = at + 1;
    if (!boundary_before(text, at)) continue;
    std::size_t end = at + term.size();
    if (boundary_after(text, end)) return true;
    if (text.compare(end, 1, "s") == 0 && boundary_after(text, end + 1)) return true;
    if (text.compare(end, 2, "es") == 0 && boundary_after(text, end + 2)) return true;
  }
}

bool hashtag_occurs(const std::string& text, const std::string& tag) {
  std::size_t from = 0;
  while (true) {
    const std::size_t at = text.find(tag, from);
    if (at == std::string::npos) return false;
    from = at + 1;
    if (boundary_before(text, at) && boundary_after(text, at + tag.size()))
      return true;
  }
}

}  // namespace

bool text_matches_topic(const std::string& raw_text, const TermDictionary& dict) {
  const std::string text = collapse_whitespace(to_lower(raw_text));
  for (const auto& term : dict.terms) {
    if (phrase_occurs(text, term)) return true;
  }
  for (const auto& tag : dict.hashtags) {
    if (hashtag_occurs(text, tag)) return true;
  }
  return false;
}

bool matches_topic(const TweetRecord& record, const TermDictionary& dict) {
  return text_matches_topic(record.raw_text, dict);
}

TweetRecord parse_record(const std::string& line, std::size_t line_number,
                         const EmojiTable& emoji) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSONL record: ") + e.what(), line_number);
  }
  if (!j.is_object()) throw ParseError("JSONL record is not an object", line_number);

  auto required = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string()) {
      throw ParseError(std::string("missing required field '") + key + "'",
                       line_number);
    }
    return it->get<std::string>();
  };

  TweetRecord r;
  r.id = required("id");
  r.author_id = required("author_id");
  r.raw_text = required("full_text");
  r.lang = required("lang");
  try {
    r.created_at = parse_iso8601(required("created_at"));
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad created_at: ") + e.what(), line_number);
  }
  if (auto it = j.find("display_name"); it != j.end() && it->is_string())
    r.display_name = it->get<std::string>();
  if (auto it = j.find("user_location"); it != j.end() && it->is_string())
    r.user_location = it->get<std::string>();

  CleanedText c = clean(r.raw_text, emoji);
  r.clean_text = std::move(c.clean_text);
  r.sentiment_text = std::move(c.sentiment_text);
  r.tokens = std::move(c.tokens);
  return r;
}

OrgScores load_org_scores(const std::string& path) {
  OrgScores scores;
  for_each_line(path, [&](const std::string& line, std::size_t n) {
    const std::string row = trim(line);
    if (row.empty()) return;
    const auto fields = split_csv_row(row);
    if (fields.size() != 2) throw ParseError("org-score row needs 2 columns", n);
    if (n == 1 && to_lower(trim(fields[0])) == "author_id") return;
    const double p = parse_double(fields[1]);
    if (p < 0.0 || p > 1.0) throw ParseError("org probability outside [0,1]", n);
    scores[trim(fields[0])] = p;
  });
  return scores;
}

namespace {

bool lang_matches(const std::string& record_lang, const std::string& want) {
  if (want.empty()) return true;
  const std::string lang = to_lower(record_lang);
  const std::string w = to_lower(want);
  if (lang == w) return true;
  // primary-subtag match: "en-US" satisfies "en"
  return lang.size() > w.size() && lang.compare(0, w.size(), w) == 0 &&
         lang[w.size()] == '-';
}

}  // namespace

FilterOutcome classify_record(const TweetRecord& record, const FilterSettings& s) {
  if (!lang_matches(record.lang, s.lang)) return FilterOutcome::DroppedLanguage;
  if (!matches_topic(record, s.dict)) return FilterOutcome::DroppedNoMatch;
  if (!s.org_scores.empty()) {
    auto it = s.org_scores.find(record.author_id);
    if (it != s.org_scores.end() && it->second >= s.org_threshold) {
      return FilterOutcome::DroppedOrg;
    }
  }
  return FilterOutcome::Kept;
}

std::vector<TweetRecord> filter_corpus(const std::vector<TweetRecord>& records,
                                       const FilterSettings& settings,
                                       CorpusStats& stats) {
  std::vector<TweetRecord> kept;
  for (const TweetRecord& r : records) {
    ++stats.read;
    switch (classify_record(r, settings)) {
      case FilterOutcome::Kept:
        ++stats.kept;
        kept.push_back(r);
        break;
      case FilterOutcome::DroppedLanguage:
        ++stats.dropped_language;
        break;
      case FilterOutcome::DroppedNoMatch:
        ++stats.dropped_no_match;
        break;
      case FilterOutcome::DroppedOrg:
        ++stats.dropped_org;
        break;
    }
  }
  return kept;
}

}  // namespace tweetshift
