#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sbs/ingest.hpp"

namespace sbs {

// Half-open [start, end).
struct DateRange {
  Date start;
  Date end;
  int days() const { return end - start; }
};

struct FetchOptions {
  std::string endpoint;  // base URL, e.g. "https://eventregistry.org"
  std::vector<std::string> keywords;
  DateRange range;
  std::string api_key;
  std::optional<std::string> language;  // query-level language filter
  int page_size = 100;
  int max_pages = 1000;
  int max_retries = 3;
  std::chrono::milliseconds backoff{250};
  std::chrono::seconds timeout{30};
  std::optional<std::filesystem::path> cache_path;
};

inline constexpr const char* kApiKeyEnv = "SBS_NEWS_API_KEY";

// Pages through POST {endpoint}/api/v1/article/getArticles with the keywords
// OR-ed together. The result keeps only articles whose title or body contains
// a keyword (case-insensitive), deduplicated by id and sorted by id; it is
// written to `cache_path` as JSONL when set. A zero-day range returns without
// any request. Throws FetchError (see retriable()) and ConfigError.
std::vector<Article> fetch_news(const FetchOptions& options);

}  // namespace sbs
