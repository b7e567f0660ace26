#include "tweetshift/hydration.hpp"

#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "tweetshift/errors.hpp"
#include "tweetshift/io.hpp"

namespace tweetshift {

FixtureBackend::FixtureBackend(const std::string& pool_path) {
  for_each_line(pool_path, [&](const std::string& line, std::size_t n) {
    if (trim(line).empty()) return;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad fixture pool record: ") + e.what(), n);
    }
    auto it = j.find("id");
    if (it == j.end() || !it->is_string())
      throw ParseError("fixture pool record without string id", n);
    pool_[it->get<std::string>()] = line;
  });
}

std::map<std::string, std::string> FixtureBackend::fetch(
    std::span<const std::string> ids) {
  std::map<std::string, std::string> out;
  for (const auto& id : ids) {
    auto it = pool_.find(id);
    if (it != pool_.end()) out[id] = it->second;
  }
  return out;
}

HttpBackend::HttpBackend(std::string base_url, std::string bearer_token)
    : base_url_(std::move(base_url)), token_(std::move(bearer_token)) {}

std::unique_ptr<HttpBackend> HttpBackend::from_env() {
  const char* url = std::getenv("TWEETSHIFT_HYDRATE_URL");
  if (url == nullptr || *url == '\0') {
    throw ConfigError("TWEETSHIFT_HYDRATE_URL is not set");
  }
  const char* token = std::getenv("TWEETSHIFT_HYDRATE_TOKEN");
  return std::make_unique<HttpBackend>(url, token ? token : "");
}

std::map<std::string, std::string> HttpBackend::fetch(
    std::span<const std::string> ids) {
  std::string host = base_url_;
  std::string path = "/";
  const std::size_t scheme = base_url_.find("://");
  const std::size_t slash =
      base_url_.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  if (slash != std::string::npos) {
    host = base_url_.substr(0, slash);
    path = base_url_.substr(slash);
  }

  std::string query = path;
  query += (path.find('?') == std::string::npos) ? "?ids=" : "&ids=";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) query += ',';
    query += ids[i];
  }

  httplib::Client client(host);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  httplib::Headers headers;
  if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);

  auto res = client.Get(query, headers);
  if (!res) throw TransportError("hydration request to " + host + " failed");
  if (res->status == 401 || res->status == 403) {
    throw CredentialError("hydration credentials rejected (" +
                          std::to_string(res->status) + ")");
  }
  if (res->status == 429 || res->status >= 500) {
    throw TransportError("hydration endpoint returned " +
                         std::to_string(res->status));
  }
  if (res->status != 200) {
    throw Error("hydration endpoint returned " + std::to_string(res->status));
  }

  nlohmann::json body;
  try {
    body = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw TransportError(std::string("bad hydration response: ") + e.what());
  }
  if (!body.is_array()) throw TransportError("hydration response is not an array");

  std::map<std::string, std::string> out;
  for (const auto& obj : body) {
    auto it = obj.find("id");
    if (it == obj.end() || !it->is_string()) continue;
    out[it->get<std::string>()] = obj.dump();
  }
  return out;
}

RateLimiter::RateLimiter(std::chrono::milliseconds min_interval, Sleeper sleeper)
    : min_interval_(min_interval),
      sleeper_(std::move(sleeper)),
      next_allowed_(std::chrono::steady_clock::now()) {
  if (!sleeper_) {
    sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

void RateLimiter::acquire() {
  const auto now = std::chrono::steady_clock::now();
  if (now < next_allowed_) {
    sleeper_(std::chrono::duration_cast<std::chrono::milliseconds>(next_allowed_ - now));
  }
  next_allowed_ = std::max(now, next_allowed_) + min_interval_;
}

HydrationClient::HydrationClient(std::shared_ptr<HydrationBackend> backend,
                                 RetryPolicy retry, std::size_t batch_size,
                                 std::shared_ptr<RateLimiter> limiter,
                                 RateLimiter::Sleeper sleeper)
    : backend_(std::move(backend)),
      retry_(retry),
      batch_size_(batch_size ? batch_size : 1),
      limiter_(std::move(limiter)),
      sleeper_(std::move(sleeper)) {
  if (!backend_) throw ConfigError("hydration client needs a backend");
  if (!sleeper_) {
    sleeper_ = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
  }
}

std::map<std::string, std::string> HydrationClient::fetch_with_retry(
    std::span<const std::string> ids) {
  auto backoff = retry_.initial_backoff;
  for (int attempt = 1;; ++attempt) {
    try {
      if (limiter_) limiter_->acquire();
      return backend_->fetch(ids);
    } catch (const CredentialError&) {
      throw;  // fatal, never retried
    } catch (const TransportError&) {
      if (attempt >= retry_.attempts) throw;
      sleeper_(backoff);
      backoff *= 2;
    }
  }
}

HydrationResult HydrationClient::hydrate(const std::vector<std::string>& ids) {
  HydrationResult out;
  for (std::size_t at = 0; at < ids.size(); at += batch_size_) {
    const std::size_t n = std::min(batch_size_, ids.size() - at);
    const std::span<const std::string> batch(ids.data() + at, n);
    auto found = fetch_with_retry(batch);
    for (const auto& id : batch) {
      auto it = found.find(id);
      if (it != found.end()) {
        out[id] = it->second;
      } else {
        out[id] = std::nullopt;  // definitive not-found
      }
    }
  }
  return out;
}

}  // namespace tweetshift
