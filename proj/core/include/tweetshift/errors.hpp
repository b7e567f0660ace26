#pragma once

#include <stdexcept>
#include <string>

namespace tweetshift {

// Error taxonomy used across the pipeline. The CLI maps these onto exit
// codes: ConfigError -> 1, data-shaped errors -> 2, anything else -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Malformed input content. `line` is 1-based when known, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input that is well formed but unusable (single-class training data,
// fewer documents than topics, a degenerate series, ...).
class DegenerateDataError : public Error {
 public:
  explicit DegenerateDataError(const std::string& what) : Error(what) {}
};

// Aggregation over an empty collection where silence would hide a bug.
class EmptyAggregateError : public Error {
 public:
  explicit EmptyAggregateError(const std::string& what) : Error(what) {}
};

// Transport failure a hydration client may retry.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& what) : Error(what) {}
};

// Credential rejection; never retried.
class CredentialError : public ConfigError {
 public:
  explicit CredentialError(const std::string& what) : ConfigError(what) {}
};

}  // namespace tweetshift
