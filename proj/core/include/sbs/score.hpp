#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbs/centrality.hpp"
#include "sbs/graph.hpp"
#include "sbs/ingest.hpp"

namespace sbs {

struct SbsScore {
  std::string brand;
  WeekWindow week;
  RawScores raw;
  double z_prevalence = 0.0;
  double z_diversity = 0.0;
  double z_connectivity = 0.0;
  double composite = 0.0;  // z_prevalence + z_diversity + z_connectivity

  bool operator==(const SbsScore&) const = default;
};

// z = (x - mean) / std with the population standard deviation over `values`.
// Throws DegenerateWindowError (naming `dimension`) for fewer than two values
// or zero spread.
std::vector<double> standardize(std::span<const double> values, std::string_view dimension);

// Keyed variant: statistics come from the `relevant` terms only (missing
// values count as 0); every relevant term gets a z-score.
std::map<std::string, double> standardize(const std::map<std::string, double>& values,
                                          std::span<const std::string> relevant,
                                          std::string_view dimension);

// Pruned-network nodes plus the tracked brands, sorted and unique.
std::vector<std::string> relevant_set(const WordNetwork& pruned, std::span<const std::string> brands);

struct SbsWeek {
  std::map<std::string, SbsScore> scores;  // by brand
  std::vector<std::string> warnings;
};

// Scores every tracked brand for one window. `pruned` must come from `docs`.
SbsWeek compute_sbs(std::span<const TokenDoc> docs, const WordNetwork& pruned,
                    std::span<const std::string> brands, const WeekWindow& week, unsigned jobs = 1);

struct SbsRow {
  WeekWindow week;
  std::optional<std::map<std::string, SbsScore>> scores;  // nullopt = absent week
  std::string absent_reason;
};

struct SbsSeries {
  std::vector<std::string> brands;
  std::vector<SbsRow> rows;  // ascending week
  std::vector<std::string> warnings;

  const SbsRow* find_lag(int lag) const;
  std::vector<std::string> week_labels() const;
};

using WeeklyDocs = std::map<WeekWindow, std::vector<TokenDoc>>;

// One row per week of `weekly`. Weeks with no documents, or whose window is
// degenerate, are kept as absent rows rather than zero scores.
SbsSeries sbs_timeseries(const WeeklyDocs& weekly, std::span<const std::string> brands,
                         const GraphConfig& graph, unsigned jobs = 1);

// week_iso,brand,prevalence,diversity,connectivity,z_prevalence,z_diversity,
// z_connectivity,sbs. Absent weeks carry empty value fields.
void write_sbs_csv(std::ostream& out, const SbsSeries& series);
// Lags are recomputed against `voting_day`.
SbsSeries read_sbs_csv(std::istream& in, Date voting_day);
SbsSeries read_sbs_csv(const std::filesystem::path& path, Date voting_day);

}  // namespace sbs
