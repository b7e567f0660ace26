#include "tweetshift/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tweetshift/errors.hpp"
#include "tweetshift/io.hpp"

namespace tweetshift {

SentimentSeries SentimentSeries::load_csv(const std::string& path) {
  SentimentSeries s;
  bool have_epoch = false;
  for_each_line(path, [&](const std::string& line, std::size_t n) {
    if (trim(line).empty()) return;
    const auto f = split_csv_row(line);
    if (n == 1 && !f.empty() && to_lower(trim(f[0])) == "date") return;
    if (f.size() != 4) throw ParseError("series row needs 4 columns", n);
    const Date d = parse_date(trim(f[0]));
    if (!have_epoch) {
      s.epoch = d;
      have_epoch = true;
    } else {
      const std::int64_t expect = s.epoch.days_since_epoch +
                                  static_cast<std::int64_t>(s.values.size());
      if (d.days_since_epoch != expect)
        throw ParseError("series dates must be consecutive", n);
    }
    s.values.push_back(parse_double(f[1]));
    s.counts.push_back(parse_int(f[2]));
    s.interpolated.push_back(parse_int(f[3]) != 0);
  });
  s.degenerate = true;
  for (auto c : s.counts) {
    if (c > 0) s.degenerate = false;
  }
  if (s.values.empty()) s.degenerate = true;
  return s;
}

std::string SentimentSeries::to_csv() const {
  std::string out = "date,value,count,interpolated\n";
  for (int t = 1; t <= size(); ++t) {
    out += format_date(date_of(t));
    out += ',';
    out += format_double(values[t - 1]);
    out += ',';
    out += std::to_string(counts[t - 1]);
    out += ',';
    out += interpolated[t - 1] ? '1' : '0';
    out += '\n';
  }
  return out;
}

SentimentSeries build_series(const std::vector<ScoredTweet>& records,
                             const std::function<bool(const ScoredTweet&)>& filter,
                             Date epoch, Date end_date) {
  const std::int64_t n = end_date - epoch + 1;
  if (n <= 0) throw Error("build_series: empty date range");

  SentimentSeries s;
  s.epoch = epoch;
  s.values.assign(static_cast<std::size_t>(n), 0.0);
  s.counts.assign(static_cast<std::size_t>(n), 0);
  s.interpolated.assign(static_cast<std::size_t>(n), false);

  std::vector<double> sums(static_cast<std::size_t>(n), 0.0);
  for (const auto& r : records) {
    if (!filter(r)) continue;
    const std::int64_t day = r.created_at.utc_date() - epoch;
    if (day < 0 || day >= n) continue;
    sums[static_cast<std::size_t>(day)] += r.compound;
    ++s.counts[static_cast<std::size_t>(day)];
  }

  std::vector<std::int64_t> observed;  // 0-based day offsets with tweets
  for (std::int64_t t = 0; t < n; ++t) {
    if (s.counts[t] > 0) {
      s.values[t] = sums[t] / static_cast<double>(s.counts[t]);
      observed.push_back(t);
    }
  }

  if (observed.empty()) {
    s.degenerate = true;
    s.interpolated.assign(static_cast<std::size_t>(n), true);
    return s;
  }

  // fill gaps: linear between neighbours, nearest value at the ends
  std::size_t next = 0;
  for (std::int64_t t = 0; t < n; ++t) {
    if (s.counts[t] > 0) continue;
    s.interpolated[t] = true;
    while (next < observed.size() && observed[next] < t) ++next;
    if (next == 0) {
      s.values[t] = s.values[observed.front()];
    } else if (next == observed.size()) {
      s.values[t] = s.values[observed.back()];
    } else {
      const std::int64_t a = observed[next - 1], b = observed[next];
      const double va = s.values[a], vb = s.values[b];
      s.values[t] = va + (vb - va) * static_cast<double>(t - a) /
                             static_cast<double>(b - a);
    }
  }
  return s;
}

const char* cost_kind_name(CostKind k) {
  switch (k) {
    case CostKind::MeanShift: return "mean_shift";
    case CostKind::VarianceShift: return "variance_shift";
    case CostKind::NormalMeanVar: return "normal_mean_var";
  }
  return "normal_mean_var";
}

CostKind parse_cost_kind(const std::string& name) {
  const std::string n = to_lower(trim(name));
  if (n == "mean_shift" || n == "meanshift") return CostKind::MeanShift;
  if (n == "variance_shift" || n == "varianceshift") return CostKind::VarianceShift;
  if (n == "normal_mean_var" || n == "normalmeanvar") return CostKind::NormalMeanVar;
  throw ConfigError("unknown cost model '" + name + "'");
}

SegmentCostEvaluator::SegmentCostEvaluator(std::span<const double> values,
                                           CostModel model)
    : model_(model), n_(static_cast<int>(values.size())) {
  if (model_.variance_floor <= 0) throw Error("variance_floor must be positive");
  prefix_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
  prefix_sq_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
  for (int i = 0; i < n_; ++i) {
    prefix_[i + 1] = prefix_[i] + values[i];
    prefix_sq_[i + 1] = prefix_sq_[i] + values[i] * values[i];
  }
  global_mean_ = n_ > 0 ? prefix_[n_] / static_cast<double>(n_) : 0.0;
}

double SegmentCostEvaluator::cost(int s, int t) const {
  if (s < 1 || t > n_ || s > t) throw Error("segment_cost: invalid range");
  const double len = static_cast<double>(t - s + 1);
  const double sum = prefix_[t] - prefix_[s - 1];
  const double sum_sq = prefix_sq_[t] - prefix_sq_[s - 1];
  switch (model_.kind) {
    case CostKind::MeanShift: {
      return std::max(0.0, sum_sq - sum * sum / len);
    }
    case CostKind::VarianceShift: {
      const double dev = sum_sq - 2.0 * global_mean_ * sum +
                         len * global_mean_ * global_mean_;
      return len * std::log(std::max(dev / len, model_.variance_floor));
    }
    case CostKind::NormalMeanVar: {
      const double sse = std::max(0.0, sum_sq - sum * sum / len);
      return len * std::log(std::max(sse / len, model_.variance_floor));
    }
  }
  return 0.0;
}

double segment_cost(const SentimentSeries& series, int s, int t, CostModel model) {
  SegmentCostEvaluator eval(series.values, model);
  return eval.cost(s, t);
}

double default_penalty(int n) { return 2.0 * std::log(static_cast<double>(n)); }

namespace {

// (objective, #breakpoints, lexicographic breakpoints), smallest wins.
bool strictly_better(double obj_a, const std::vector<int>& bp_a, double obj_b,
                     const std::vector<int>& bp_b) {
  if (obj_a != obj_b) return obj_a < obj_b;
  if (bp_a.size() != bp_b.size()) return bp_a.size() < bp_b.size();
  return std::lexicographical_compare(bp_a.begin(), bp_a.end(), bp_b.begin(),
                                      bp_b.end());
}

}  // namespace

Segmentation pelt_values(std::span<const double> values, CostModel model,
                         double beta) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw Error("pelt: series must have at least 2 points");
  if (!(beta > 0)) throw Error("pelt: beta must be positive");

  SegmentCostEvaluator eval(values, model);

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> F(static_cast<std::size_t>(n) + 1, inf);
  std::vector<std::vector<int>> path(static_cast<std::size_t>(n) + 1);
  F[0] = 0.0;

  std::vector<int> candidates{0};
  std::vector<int> survivors;

  for (int t = 1; t <= n; ++t) {
    double best = inf;
    std::vector<int> best_path;
    bool have = false;
    for (int s : candidates) {
      const double total = F[s] + eval.cost(s + 1, t) + beta;
      if (have && total > best) continue;
      std::vector<int> cand_path = path[s];
      if (s > 0) cand_path.push_back(s);
      if (!have || strictly_better(total, cand_path, best, best_path)) {
        best = total;
        best_path = std::move(cand_path);
        have = true;
      }
    }
    F[t] = best;
    path[t] = std::move(best_path);

    // prune: s stays viable only while it could still start the last segment
    survivors.clear();
    for (int s : candidates) {
      if (F[s] + eval.cost(s + 1, t) <= F[t]) survivors.push_back(s);
    }
    survivors.push_back(t);
    candidates.swap(survivors);
  }

  Segmentation out;
  out.breakpoints = path[n];
  out.objective = F[n];
  return out;
}

Segmentation pelt(const SentimentSeries& series, CostModel model, double beta,
                  bool force) {
  if (series.degenerate && !force) {
    throw DegenerateDataError("series '" + series.demographic_filter +
                              "' has no observed days");
  }
  return pelt_values(series.values, model, beta);
}

Segmentation brute_force_values(std::span<const double> values, CostModel model,
                                double beta, int max_n) {
  const int n = static_cast<int>(values.size());
  if (n < 1) throw Error("brute_force: empty series");
  if (n > max_n) {
    throw Error("brute_force: series length " + std::to_string(n) +
                " above oracle limit " + std::to_string(max_n));
  }

  SegmentCostEvaluator eval(values, model);

  Segmentation best;
  bool have_best = false;
  std::vector<int> bps;
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    bps.clear();
    for (int i = 1; i < n; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) bps.push_back(i);
    }
    // accumulate left to right with the DP's association order, so exact
    // objective ties break identically in both implementations
    double obj = 0.0;
    int start = 1;
    for (int bp : bps) {
      obj = obj + eval.cost(start, bp);
      obj = obj + beta;
      start = bp + 1;
    }
    obj = obj + eval.cost(start, n);
    obj = obj + beta;

    if (!have_best ||
        strictly_better(obj, bps, best.objective, best.breakpoints)) {
      best.objective = obj;
      best.breakpoints = bps;
      have_best = true;
    }
  }
  return best;
}

Segmentation brute_force(const SentimentSeries& series, CostModel model,
                         double beta, int max_n) {
  if (series.degenerate) {
    throw DegenerateDataError("series '" + series.demographic_filter +
                              "' has no observed days");
  }
  return brute_force_values(series.values, model, beta, max_n);
}

std::map<std::string, ScanEntry> scan(
    const std::map<std::string, SentimentSeries>& series_by_demographic,
    CostModel model, double beta) {
  if (series_by_demographic.empty()) throw Error("scan: no series given");
  std::map<std::string, ScanEntry> out;
  for (const auto& [key, series] : series_by_demographic) {
    ScanEntry entry;
    if (series.degenerate || series.size() < 2) {
      entry.degenerate = true;
    } else {
      entry.segmentation = pelt(series, model, beta);
    }
    out.emplace(key, std::move(entry));
  }
  return out;
}

EventCatalog EventCatalog::load_csv(const std::string& path) {
  EventCatalog cat;
  for_each_line(path, [&](const std::string& line, std::size_t n) {
    if (trim(line).empty()) return;
    const auto f = split_csv_row(line);
    if (n == 1 && !f.empty() && to_lower(trim(f[0])) == "date") return;
    if (f.size() < 2) throw ParseError("event row needs date,label", n);
    cat.events.push_back(Event{parse_date(trim(f[0])), trim(f[1])});
  });
  std::sort(cat.events.begin(), cat.events.end(),
            [](const Event& a, const Event& b) {
              if (a.date != b.date) return a.date < b.date;
              return a.label < b.label;
            });
  return cat;
}

std::vector<BreakpointAssociation> associate_events(const Segmentation& seg,
                                                    const SentimentSeries& series,
                                                    const EventCatalog& catalog,
                                                    int window_days) {
  std::vector<BreakpointAssociation> out;
  for (int bp : seg.breakpoints) {
    BreakpointAssociation a;
    a.index = bp;
    a.date = series.date_of(bp);
    for (const Event& e : catalog.events) {
      const std::int64_t offset = e.date - a.date;
      if (offset >= -window_days && offset <= window_days) {
        a.matches.push_back(MatchedEvent{e, offset});
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace tweetshift
