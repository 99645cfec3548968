#pragma once

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sbs/date.hpp"

namespace sbs {

// One dated news item.
struct Article {
  std::string id;
  Date published;
  std::string title;
  std::string body;
  std::optional<std::string> source;    // host name
  std::optional<std::string> language;  // IETF tag

  bool operator==(const Article&) const = default;
};

// One published poll figure. Shares are fractions in [0, 1].
struct PollRecord {
  Date date;
  std::string option;
  double share = 0.0;

  bool operator==(const PollRecord&) const = default;
};

struct EventConfig {
  Date voting_day;
  Date analysis_start;
  Date analysis_end;
  std::vector<std::string> tracked_brands;
  std::vector<std::string> keywords;
  std::vector<PollRecord> poll_records;

  // Throws ConfigError unless analysis_start < analysis_end < voting_day and
  // at least one brand is tracked.
  void validate() const;
};

// An ISO-8601 week plus its distance, in whole weeks, from the voting week.
struct WeekWindow {
  int iso_year = 0;
  int iso_week = 0;
  int lag = 0;

  IsoWeek iso() const { return {iso_year, iso_week}; }
  std::string label() const;  // "2016-W21"

  bool operator==(const WeekWindow&) const = default;
  auto operator<=>(const WeekWindow&) const = default;
};

WeekWindow week_of(Date day, Date voting_day);

// Every ISO week touched by [analysis_start, analysis_end], oldest first.
std::vector<WeekWindow> analysis_weeks(const EventConfig& config);

// Throws ParseError (with the 1-based line number) on malformed lines or
// duplicate ids. Blank lines are skipped; unknown fields are ignored.
std::vector<Article> read_jsonl(std::istream& in);
std::vector<Article> read_jsonl(const std::filesystem::path& path);
void write_jsonl(std::ostream& out, std::span<const Article> articles);
void write_jsonl(const std::filesystem::path& path, std::span<const Article> articles);

// Keeps analysis_start <= published <= analysis_end, never the voting day.
std::vector<Article> filter_period(std::span<const Article> articles, const EventConfig& config);

using WeeklyArticles = std::map<WeekWindow, std::vector<Article>>;

// Buckets articles by the ISO week of their publication date. Input order is
// preserved inside each bucket.
WeeklyArticles group_by_week(std::span<const Article> articles, const EventConfig& config);

}  // namespace sbs
