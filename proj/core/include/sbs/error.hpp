#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbs {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, lexicon, stopword list or command-line usage.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `line` is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A lookup for something that must exist (an arc, a lag week) failed.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Nothing to work on, e.g. no article falls in the analysis period.
class EmptyDataError : public Error {
 public:
  using Error::Error;
};

class ComputationError : public Error {
 public:
  using Error::Error;
};

// A standardized dimension has zero variance (or fewer than two terms).
class DegenerateWindowError : public ComputationError {
 public:
  DegenerateWindowError(std::string dimension, const std::string& detail)
      : ComputationError("degenerate window: dimension '" + dimension + "' " + detail),
        dimension_(std::move(dimension)) {}
  const std::string& dimension() const noexcept { return dimension_; }

 private:
  std::string dimension_;
};

class NonPositiveScoreError : public ComputationError {
 public:
  explicit NonPositiveScoreError(std::vector<std::string> offenders);
  const std::vector<std::string>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<std::string> offenders_;
};

// APE is undefined when the actual value is zero.
class UndefinedApeError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

// Failure talking to the news API. Transport errors, HTTP 429 and 5xx are
// retriable; authentication and other client errors are not.
class FetchError : public Error {
 public:
  FetchError(const std::string& what, int status, bool retriable)
      : Error(what), status_(status), retriable_(retriable) {}
  int status() const noexcept { return status_; }
  bool retriable() const noexcept { return retriable_; }

 private:
  int status_;
  bool retriable_;
};

inline NonPositiveScoreError::NonPositiveScoreError(std::vector<std::string> offenders)
    : ComputationError([&] {
        std::string msg = "non-positive score for:";
        for (const auto& o : offenders) msg += " " + o;
        return msg;
      }()),
      offenders_(std::move(offenders)) {}

}  // namespace sbs
