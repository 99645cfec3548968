#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbs/ingest.hpp"
#include "sbs/score.hpp"

namespace sbs {

// All shares, errors and percentages below are fractions in [0, 1]; only the
// report writers scale them to % or percentage points.

enum class Basis { sbs, prevalence, diversity, connectivity, poll_average };

std::string_view to_string(Basis basis);
Basis parse_basis(std::string_view name);  // throws ConfigError
inline constexpr Basis kScoreBases[] = {Basis::sbs, Basis::prevalence, Basis::diversity, Basis::connectivity};

struct ClampPolicy {
  bool enabled = true;
  double floor = 0.01;
};

struct ForecastShare {
  WeekWindow week;
  Basis basis = Basis::sbs;
  std::map<std::string, double> shares;
  std::vector<std::string> warnings;
};

// share_i = score_i / sum_j score_j. A score <= 0 is either raised to the
// clamp floor with a warning or, with clamping off, reported through
// NonPositiveScoreError listing every offender. Positive scores are never
// touched, so shares stay invariant under scaling.
ForecastShare forecast_shares(const std::map<std::string, double>& scores, Basis basis,
                              const ClampPolicy& clamp = {}, const WeekWindow& week = {});

// The per-brand value a basis forecasts from: the composite or one of the
// standardized dimensions (they add up to the composite).
std::map<std::string, double> basis_scores(const std::map<std::string, SbsScore>& scores, Basis basis);

struct ElectionOutcome {
  std::map<std::string, double> official;
  std::map<std::string, double> adjusted;  // official / sum over tracked
};

// Throws ConfigError when a tracked option has no official result and
// ComputationError when the tracked total is not positive.
ElectionOutcome adjust_actuals(const std::map<std::string, double>& official,
                               std::span<const std::string> tracked);

struct ErrorPair {
  double actual;
  double forecast;
};

// |y - y_hat| / y. Throws UndefinedApeError unless y > 0.
double ape(double actual, double forecast);
double mape(std::span<const ErrorPair> pairs);
double mae(std::span<const ErrorPair> pairs);

struct RankComparison {
  std::map<std::string, int> real;
  std::map<std::string, int> forecast;
  int n_misranked = 0;
};

// Rank 1 is the largest share; ties go to the lexicographically smaller id.
std::map<std::string, int> rank_by_share(const std::map<std::string, double>& shares);
RankComparison rank_compare(const std::map<std::string, double>& actual,
                            const std::map<std::string, double>& forecast);

// Per-option mean over the given polls, untracked options dropped and the
// rest renormalized. nullopt when there are no polls or a tracked option is
// never polled.
std::optional<std::map<std::string, double>> poll_average(std::span<const PollRecord> polls,
                                                          std::span<const std::string> tracked);
// Polls published inside `week`, averaged.
std::optional<ForecastShare> average_polls(std::span<const PollRecord> polls, const WeekWindow& week,
                                           Date voting_day, std::span<const std::string> tracked);

struct EvalRow {
  std::string option;
  double actual = 0;
  double adjusted_actual = 0;
  double forecast = 0;
  double abs_error = 0;
  double ape = 0;
  int real_rank = 0;
  int forecast_rank = 0;
};

struct EvalReport {
  WeekWindow week;
  Basis basis = Basis::sbs;
  std::vector<EvalRow> rows;  // by real rank
  double mape = 0;
  double mae = 0;
  int n_misranked = 0;
};

EvalReport evaluate(const ForecastShare& forecast, const ElectionOutcome& outcome);

// date,option,share with share a fraction in [0, 1].
std::vector<PollRecord> read_polls_csv(std::istream& in);
std::vector<PollRecord> read_polls_csv(const std::filesystem::path& path);

}  // namespace sbs
