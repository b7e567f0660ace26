#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tweetshift {

// One batch lookup: returns raw JSONL objects keyed by id for the ids the
// backend knows. Missing ids are simply absent from the result. Throws
// TransportError for retryable failures, CredentialError for auth.
class HydrationBackend {
 public:
  virtual ~HydrationBackend() = default;
  virtual std::map<std::string, std::string> fetch(
      std::span<const std::string> ids) = 0;
};

// Serves records from a local JSONL pool file keyed by "id".
class FixtureBackend : public HydrationBackend {
 public:
  explicit FixtureBackend(const std::string& pool_path);
  std::map<std::string, std::string> fetch(
      std::span<const std::string> ids) override;

 private:
  std::map<std::string, std::string> pool_;
};

// GET {base_url}?ids=a,b,c with optional bearer token, expecting a JSON
// array of tweet objects. Reads TWEETSHIFT_HYDRATE_URL and
// TWEETSHIFT_HYDRATE_TOKEN when constructed via from_env().
class HttpBackend : public HydrationBackend {
 public:
  HttpBackend(std::string base_url, std::string bearer_token);
  static std::unique_ptr<HttpBackend> from_env();
  std::map<std::string, std::string> fetch(
      std::span<const std::string> ids) override;

 private:
  std::string base_url_;
  std::string token_;
};

// Minimum spacing between backend requests; one instance is shared by
// every worker using the same client.
class RateLimiter {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  RateLimiter(std::chrono::milliseconds min_interval, Sleeper sleeper);
  void acquire();

 private:
  std::chrono::milliseconds min_interval_;
  Sleeper sleeper_;
  std::chrono::steady_clock::time_point next_allowed_;
};

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{1000};  // doubles per retry
};

// id -> raw JSONL object, or nullopt for ids the backend definitively does
// not have (deleted tweets).
using HydrationResult = std::map<std::string, std::optional<std::string>>;

class HydrationClient {
 public:
  HydrationClient(std::shared_ptr<HydrationBackend> backend,
                  RetryPolicy retry = {}, std::size_t batch_size = 100,
                  std::shared_ptr<RateLimiter> limiter = nullptr,
                  RateLimiter::Sleeper sleeper = nullptr);

  HydrationResult hydrate(const std::vector<std::string>& ids);

 private:
  std::map<std::string, std::string> fetch_with_retry(
      std::span<const std::string> ids);

  std::shared_ptr<HydrationBackend> backend_;
  RetryPolicy retry_;
  std::size_t batch_size_;
  std::shared_ptr<RateLimiter> limiter_;
  RateLimiter::Sleeper sleeper_;
};

}  // namespace tweetshift
