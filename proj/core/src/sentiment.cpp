#include "tweetshift/sentiment.hpp"

#include <cctype>
#include <cmath>

#include "tweetshift/errors.hpp"
#include "tweetshift/io.hpp"

namespace tweetshift {

Lexicon Lexicon::load(const std::string& path) {
  Lexicon lex;
  for_each_line(path, [&](const std::string& line, std::size_t n) {
    if (line.empty() || line[0] == '#') return;
    const auto fields = split(line, '\t');
    if (fields.size() < 2) throw ParseError("lexicon row needs token<TAB>valence", n);
    const std::string token = trim(fields[0]);
    if (token.empty()) throw ParseError("empty lexicon token", n);
    double v;
    try {
      v = parse_double(fields[1]);
    } catch (const ParseError&) {
      throw ParseError("bad valence for '" + token + "'", n);
    }
    lex.entries[to_lower(token)] = v;  // last row wins
  });
  return lex;
}

void Lexicon::load_emoji(const std::string& path) {
  for_each_line(path, [&](const std::string& line, std::size_t n) {
    if (line.empty() || line[0] == '#') return;
    const auto fields = split(line, '\t');
    if (fields.size() < 2) throw ParseError("emoji lexicon row needs 2 columns", n);
    const std::string token = trim(fields[0]);
    if (token.empty()) throw ParseError("empty emoji token", n);
    double v;
    try {
      v = parse_double(fields[1]);
    } catch (const ParseError&) {
      throw ParseError("bad valence for emoji row", n);
    }
    emoji_entries[token] = v;
  });
}

RuleSet RuleSet::defaults() {
  RuleSet r;
  const double up = 0.293, down = -0.293;
  for (const char* w : {"absolutely", "amazingly", "completely", "considerably",
                        "decidedly", "deeply", "enormously", "entirely",
                        "especially", "exceptionally", "extremely", "greatly",
                        "highly", "hugely", "incredibly", "intensely", "majorly",
                        "particularly", "purely", "really", "remarkably", "so",
                        "substantially", "thoroughly", "totally", "tremendously",
                        "unbelievably", "unusually", "utterly", "very"}) {
    r.boosters[w] = up;
  }
  for (const char* w : {"almost", "barely", "hardly", "kinda", "kind of",
                        "less", "little", "marginally", "occasionally",
                        "partly", "scarcely", "slightly", "somewhat",
                        "sort of"}) {
    r.boosters[w] = down;
  }
  for (const char* w :
       {"ain't", "aren't", "can't", "couldn't", "didn't", "doesn't", "don't",
        "hasn't", "haven't", "isn't", "never", "no", "nobody", "none", "nor",
        "not", "nothing", "nowhere", "shouldn't", "wasn't", "weren't", "won't",
        "wouldn't", "without", "cannot"}) {
    r.negators.insert(w);
  }
  return r;
}

namespace {

struct WordToken {
  std::string key;   // lowercased, '#' and edge punctuation stripped
  bool all_caps = false;
};

bool is_word_char(unsigned char c) { return std::isalnum(c) || c == '\'' || c >= 0x80; }

std::string strip_edges(const std::string& raw) {
  std::size_t b = 0, e = raw.size();
  if (b < e && raw[b] == '#') ++b;
  while (b < e && !is_word_char(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && !is_word_char(static_cast<unsigned char>(raw[e - 1]))) --e;
  return raw.substr(b, e - b);
}

bool token_all_caps(const std::string& raw) {
  bool has_alpha = false;
  for (char ch : raw) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (std::isalpha(c)) {
      has_alpha = true;
      if (std::islower(c)) return false;
    }
  }
  return has_alpha;
}

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

int trailing_exclamations(const std::string& text) {
  std::size_t e = text.size();
  while (e > 0 && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  int n = 0;
  while (e > 0 && text[e - 1] == '!') {
    ++n;
    --e;
  }
  return n;
}

// Sum of single-emoji valences when the whole token is emoji codepoints;
// nullopt when the token has no usable emoji reading.
std::vector<double> emoji_contributions(const std::string& token,
                                        const Lexicon& lex,
                                        const EmojiTable& emoji) {
  std::vector<double> out;
  auto exact = lex.emoji_entries.find(token);
  if (exact != lex.emoji_entries.end()) {
    out.push_back(exact->second);
    return out;
  }
  if (!contains_emoji(token, emoji)) return out;
  std::size_t i = 0;
  while (i < token.size()) {
    const std::size_t start = i;
    const char32_t cp = decode_utf8(token, i);
    if (cp == 0x200D || (cp >= 0xFE00 && cp <= 0xFE0F)) continue;
    auto it = lex.emoji_entries.find(token.substr(start, i - start));
    if (it != lex.emoji_entries.end()) out.push_back(it->second);
  }
  return out;
}

}  // namespace

SentimentScore score(const std::string& text, const Lexicon& lex,
                     const RuleSet& rules, const EmojiTable& emoji) {
  std::vector<std::string> raw_tokens;
  {
    std::string cur;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) raw_tokens.push_back(std::move(cur)), cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) raw_tokens.push_back(std::move(cur));
  }

  // caps emphasis only applies when the text mixes cases
  int caps_words = 0, alpha_words = 0;
  for (const auto& t : raw_tokens) {
    bool has_alpha = false;
    for (char c : t) {
      if (std::isalpha(static_cast<unsigned char>(c))) has_alpha = true;
    }
    if (!has_alpha) continue;
    ++alpha_words;
    if (token_all_caps(t)) ++caps_words;
  }
  const bool caps_differential = caps_words > 0 && caps_words < alpha_words;

  std::vector<double> contributions;
  std::vector<WordToken> words;
  std::size_t neutral_hits = 0;

  for (const auto& raw : raw_tokens) {
    const auto emoji_vals = emoji_contributions(raw, lex, emoji);
    if (!emoji_vals.empty()) {
      for (double v : emoji_vals) contributions.push_back(v);
      continue;
    }

    WordToken w;
    w.key = to_lower(strip_edges(raw));
    w.all_caps = token_all_caps(raw);
    if (w.key.empty()) continue;

    auto hit = lex.entries.find(w.key);
    if (hit == lex.entries.end()) {
      ++neutral_hits;
      words.push_back(std::move(w));
      continue;
    }

    double valence = hit->second;
    if (w.all_caps && caps_differential) {
      valence += sign(valence) * rules.caps_boost;
    }
    const std::size_t window = static_cast<std::size_t>(rules.negation_window);
    const std::size_t begin = words.size() > window ? words.size() - window : 0;
    bool negated = false;
    for (std::size_t j = begin; j < words.size(); ++j) {
      auto booster = rules.boosters.find(words[j].key);
      if (booster != rules.boosters.end()) {
        valence += sign(valence) * booster->second;
      }
      if (rules.negators.count(words[j].key)) negated = true;
    }
    if (negated) valence *= rules.negation_factor;

    contributions.push_back(valence);
    words.push_back(std::move(w));
  }

  double s = 0.0;
  for (double c : contributions) s += c;

  const int bangs = std::min(3, trailing_exclamations(text));
  if (s != 0.0 && bangs > 0) {
    s += sign(s) * bangs * rules.exclamation_increment;
  }

  SentimentScore out;
  out.compound = s / std::sqrt(s * s + rules.alpha);

  double pos_sum = 0.0, neg_sum = 0.0;
  for (double c : contributions) {
    if (c > 0) pos_sum += c + 1.0;
    if (c < 0) neg_sum += -c + 1.0;
  }
  const double total = pos_sum + neg_sum + static_cast<double>(neutral_hits);
  if (total > 0) {
    out.pos = pos_sum / total;
    out.neg = neg_sum / total;
    out.neu = static_cast<double>(neutral_hits) / total;
  } else {
    out.pos = 0.0;
    out.neg = 0.0;
    out.neu = 1.0;
  }
  return out;
}

Polarity polarity(double compound) {
  if (!(compound >= -1.0 && compound <= 1.0)) {
    throw Error("compound outside [-1, 1]");
  }
  if (compound > 0) return Polarity::Positive;
  if (compound < 0) return Polarity::Negative;
  return Polarity::Neutral;
}

const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "Positive";
    case Polarity::Negative: return "Negative";
    case Polarity::Neutral: return "Neutral";
  }
  return "Neutral";
}

double mean_compound(const std::vector<SentimentScore>& scores) {
  if (scores.empty()) {
    throw EmptyAggregateError("mean_compound over an empty list");
  }
  double sum = 0.0;
  for (const auto& s : scores) sum += s.compound;
  return sum / static_cast<double>(scores.size());
}

}  // namespace tweetshift
