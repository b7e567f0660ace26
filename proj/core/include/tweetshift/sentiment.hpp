#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tweetshift/text.hpp"

namespace tweetshift {

// Token -> mean valence (typically in [-4, 4]) plus a separate emoji map.
struct Lexicon {
  std::map<std::string, double> entries;
  std::map<std::string, double> emoji_entries;

  // TSV: token<TAB>mean_valence, optional third column ignored. Duplicate
  // tokens keep the last row; non-finite valences are row errors.
  static Lexicon load(const std::string& path);
  void load_emoji(const std::string& path);
};

struct RuleSet {
  std::map<std::string, double> boosters;
  std::set<std::string> negators;
  int negation_window = 3;
  double caps_boost = 0.733;
  double exclamation_increment = 0.292;
  double negation_factor = -0.74;
  double alpha = 15.0;  // compound normalizer

  // Default booster/negator vocab with the canonical increments.
  static RuleSet defaults();
};

struct SentimentScore {
  double compound = 0.0;  // s / sqrt(s^2 + alpha), in (-1, 1)
  double pos = 0.0;
  double neu = 1.0;
  double neg = 0.0;
};

enum class Polarity { Positive, Negative, Neutral };

// Scores sentiment_text (emoji and hashtags retained). Word tokens are
// whitespace-split, edge punctuation stripped, leading '#' stripped for
// lookup. Boosters and negators act over the preceding negation_window
// word tokens; ALL-CAPS lexicon hits gain caps_boost unless the whole
// text is capitalized; up to 3 trailing '!' grow the summed magnitude.
SentimentScore score(const std::string& text, const Lexicon& lex,
                     const RuleSet& rules, const EmojiTable& emoji);

// Paper convention: any positive compound is Positive, any negative is
// Negative, exactly 0 is Neutral.
Polarity polarity(double compound);
const char* polarity_name(Polarity p);

// Arithmetic mean; throws EmptyAggregateError on an empty list.
double mean_compound(const std::vector<SentimentScore>& scores);

}  // namespace tweetshift
