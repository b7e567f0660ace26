#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace tweetshift {

// Possessive-form attribute with its pointwise mutual information toward
// the college class.
struct AttributePattern {
  std::string phrase;  // lowercase, space-separated tokens
  double pmi = 0.0;
};

struct LabeledTimeline {
  std::vector<std::string> tokens;
  bool is_college = false;
};

// pmi(p) = log2( p(p | college) / p(p) ) over timeline document frequency,
// add-one smoothed. Sorted by pmi descending, ties by phrase. Throws
// DegenerateDataError when only one class is present.
std::vector<AttributePattern> rank_attributes(
    const std::vector<LabeledTimeline>& timelines,
    const std::vector<std::string>& candidate_phrases);

// tf * (ln((1+N)/(1+df)) + 1), rows L2-normalized.
class TfidfVectorizer {
 public:
  void fit(const std::vector<std::vector<std::string>>& docs,
           const std::vector<std::string>& vocabulary);
  std::vector<double> transform(const std::vector<std::string>& doc) const;
  std::vector<std::vector<double>> transform_all(
      const std::vector<std::vector<std::string>>& docs) const;

  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const std::vector<double>& idf() const { return idf_; }
  bool fitted() const { return !vocab_.empty(); }

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, int> index_;
  std::vector<double> idf_;
};

std::vector<std::vector<double>> tfidf(
    const std::vector<std::vector<std::string>>& docs,
    const std::vector<std::string>& vocabulary);

struct ForestParams {
  int n_trees = 100;
  int max_depth = 0;         // 0 = unlimited
  int min_samples_split = 2;
  int max_features = 0;      // 0 = round(sqrt(#features))
};

// CART trees, gini impurity, bootstrap rows, random feature subset per
// node. Bit-reproducible for a fixed seed.
class RandomForest {
 public:
  void train(const std::vector<std::vector<double>>& features,
             const std::vector<int>& labels, ForestParams params,
             std::uint64_t seed);
  int predict(const std::vector<double>& row) const;
  bool trained() const { return !trees_.empty(); }
  int n_trees() const { return static_cast<int>(trees_.size()); }

 private:
  struct Node {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int label = -1;  // >= 0 on leaves
  };
  struct Tree {
    std::vector<Node> nodes;
    int predict(const std::vector<double>& row) const;
  };

  std::vector<Tree> trees_;
  int n_labels_ = 0;
};

struct CollegeClassifier {
  TfidfVectorizer vectorizer;
  RandomForest forest;
  std::set<std::string> override_terms = {"professor", "textbook"};
  std::size_t override_min_count = 5;
};

// Trains the forest on tf-idf rows of the labeled timelines.
CollegeClassifier train_college(const std::vector<LabeledTimeline>& timelines,
                                const std::vector<std::string>& vocabulary,
                                ForestParams params, std::uint64_t seed);

// Forest vote, except any override term at override_min_count or more
// occurrences forces a college label.
bool predict_college(const CollegeClassifier& model,
                     const std::vector<std::string>& timeline_tokens);

// Occurrences of a (possibly multi-token) phrase as a token run.
std::size_t count_phrase(const std::vector<std::string>& tokens,
                         const std::string& phrase);

}  // namespace tweetshift
