#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tweetshift/dates.hpp"

namespace tweetshift {

// Daily mean-compound series for one demographic slice. Day t (1-based)
// covers epoch + (t-1) days. Days with no tweets carry interpolated
// values and are flagged; a series with no data at all is degenerate.
struct SentimentSeries {
  Date epoch;
  std::vector<double> values;
  std::vector<std::int64_t> counts;
  std::vector<bool> interpolated;
  std::string demographic_filter;
  bool degenerate = false;

  int size() const { return static_cast<int>(values.size()); }
  Date date_of(int day_index) const { return epoch.plus_days(day_index - 1); }

  // CSV columns: date,value,count,interpolated (0/1)
  static SentimentSeries load_csv(const std::string& path);
  std::string to_csv() const;
};

struct ScoredTweet {
  Timestamp created_at;
  double compound = 0.0;
  std::string author_id;
};

// Mean compound per day over records matching the filter inside
// [epoch, end_date]; zero-count days are linearly interpolated between
// the nearest observed days (endpoints take the nearest value).
SentimentSeries build_series(const std::vector<ScoredTweet>& records,
                             const std::function<bool(const ScoredTweet&)>& filter,
                             Date epoch, Date end_date);

enum class CostKind { MeanShift, VarianceShift, NormalMeanVar };

struct CostModel {
  CostKind kind = CostKind::NormalMeanVar;
  double variance_floor = 1e-8;
};

const char* cost_kind_name(CostKind k);
CostKind parse_cost_kind(const std::string& name);

// O(1) segment costs over a fixed series via prefix sums.
//   MeanShift:     sum of squared deviations from the segment mean
//   VarianceShift: n * log(max(var around the global series mean, floor))
//   NormalMeanVar: n * log(max(MLE variance, floor))
// Gaussian constant terms are dropped; they cancel across segmentations.
class SegmentCostEvaluator {
 public:
  SegmentCostEvaluator(std::span<const double> values, CostModel model);

  // 1-based inclusive [s, t]
  double cost(int s, int t) const;
  int size() const { return n_; }

 private:
  CostModel model_;
  int n_;
  double global_mean_;
  std::vector<double> prefix_;
  std::vector<double> prefix_sq_;
};

double segment_cost(const SentimentSeries& series, int s, int t, CostModel model);

// Breakpoints are strictly increasing last-left-segment indices in
// [1, N-1]; objective = sum of segment costs + beta * (#segments).
struct Segmentation {
  std::vector<int> breakpoints;
  double objective = 0.0;
};

// BIC-flavoured default penalty.
double default_penalty(int n);

// Exact minimizer of cost + beta per segment via the pruned DP.
// Ties break toward fewer, then lexicographically earlier, breakpoints.
Segmentation pelt_values(std::span<const double> values, CostModel model,
                         double beta);
Segmentation pelt(const SentimentSeries& series, CostModel model, double beta,
                  bool force = false);

// Exhaustive 2^(N-1) oracle with the same tie-break. Refuses series
// longer than max_n.
Segmentation brute_force_values(std::span<const double> values, CostModel model,
                                double beta, int max_n = 16);
Segmentation brute_force(const SentimentSeries& series, CostModel model,
                         double beta, int max_n = 16);

struct ScanEntry {
  Segmentation segmentation;
  bool degenerate = false;
};

// Per-demographic PELT; degenerate series are reported, not segmented.
std::map<std::string, ScanEntry> scan(
    const std::map<std::string, SentimentSeries>& series_by_demographic,
    CostModel model, double beta);

struct Event {
  Date date;
  std::string label;
};

struct EventCatalog {
  std::vector<Event> events;
  static EventCatalog load_csv(const std::string& path);  // date,label
};

struct MatchedEvent {
  Event event;
  std::int64_t offset_days = 0;  // event date minus breakpoint date
};

struct BreakpointAssociation {
  int index = 0;
  Date date;
  std::vector<MatchedEvent> matches;  // empty -> unmatched
};

// Converts each breakpoint to its calendar date and attaches catalog
// events within +-window_days (inclusive).
std::vector<BreakpointAssociation> associate_events(const Segmentation& seg,
                                                    const SentimentSeries& series,
                                                    const EventCatalog& catalog,
                                                    int window_days = 3);

}  // namespace tweetshift
