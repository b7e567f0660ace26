#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tweetshift/dates.hpp"
#include "tweetshift/text.hpp"

namespace tweetshift {

// One tweet in canonical form. clean_text is free of URLs, mentions,
// hashtags and emoji; sentiment_text keeps hashtags and emoji for the
// valence scorer. tokens is exactly tokenize(clean_text).
struct TweetRecord {
  std::string id;
  Timestamp created_at;
  std::string author_id;
  std::string raw_text;
  std::string clean_text;
  std::string sentiment_text;
  std::vector<std::string> tokens;
  std::string lang;
  // optional profile fields used by demographic attribution
  std::string display_name;
  std::string user_location;
};

struct CleanedText {
  std::string clean_text;
  std::string sentiment_text;
  std::vector<std::string> tokens;
};

CleanedText clean(const std::string& raw_text, const EmojiTable& emoji);

// Topic dictionary: lowercase phrases plus lowercase #hashtags.
struct TermDictionary {
  std::set<std::string> terms;
  std::set<std::string> hashtags;

  bool empty() const { return terms.empty() && hashtags.empty(); }

  // One term or #hashtag per line; "# " opens a comment line.
  static TermDictionary load(const std::string& path);
};

// Word-boundary phrase match against lowercased raw text. A term also
// matches its plain "s"/"es" plural, so "mask" hits "masks" but never
// "bitmask". Hashtags match as whole case-folded tokens.
bool matches_topic(const TweetRecord& record, const TermDictionary& dict);
bool text_matches_topic(const std::string& raw_text, const TermDictionary& dict);

struct CorpusStats {
  std::uint64_t read = 0;
  std::uint64_t kept = 0;
  std::uint64_t dropped_language = 0;
  std::uint64_t dropped_no_match = 0;
  std::uint64_t dropped_deleted = 0;
  std::uint64_t dropped_org = 0;

  std::uint64_t dropped_total() const {
    return dropped_language + dropped_no_match + dropped_deleted + dropped_org;
  }
  bool conserved() const { return read == kept + dropped_total(); }
};

// JSONL schema: required keys id, created_at (ISO-8601), author_id,
// full_text, lang; optional display_name and user_location; unknown keys
// ignored. Throws ParseError carrying the line number.
TweetRecord parse_record(const std::string& line, std::size_t line_number,
                         const EmojiTable& emoji);

// author_id -> probability the account is an organization, in [0, 1].
using OrgScores = std::unordered_map<std::string, double>;
OrgScores load_org_scores(const std::string& path);

enum class FilterOutcome { Kept, DroppedLanguage, DroppedNoMatch, DroppedOrg };

struct FilterSettings {
  TermDictionary dict;
  std::string lang = "en";  // primary-subtag match, "en" accepts "en-US"
  OrgScores org_scores;     // empty disables org filtering
  double org_threshold = 0.5;
};

// Checks run language -> term match -> org score; each record lands in
// exactly one bucket, so stats conservation is structural.
FilterOutcome classify_record(const TweetRecord& record, const FilterSettings& s);

std::vector<TweetRecord> filter_corpus(const std::vector<TweetRecord>& records,
                                       const FilterSettings& settings,
                                       CorpusStats& stats);

}  // namespace tweetshift
