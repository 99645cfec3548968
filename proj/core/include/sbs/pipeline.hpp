#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbs/error.hpp"
#include "sbs/forecast.hpp"
#include "sbs/graph.hpp"
#include "sbs/ingest.hpp"
#include "sbs/news_client.hpp"
#include "sbs/score.hpp"
#include "sbs/textprep.hpp"

namespace sbs {

struct FetchSettings {
  std::string endpoint = "https://eventregistry.org";
  std::optional<std::string> language;
  int page_size = 100;
  int max_retries = 3;
};

// Everything one run needs. Relative paths in the JSON file are resolved
// against the file's directory; output_dir is created on demand.
struct RunConfig {
  EventConfig event;
  PrepConfig prep;
  GraphConfig graph;
  std::filesystem::path lexicon_path;
  std::optional<std::filesystem::path> stopwords_path;
  std::filesystem::path corpus_path;
  std::optional<FetchSettings> fetch;
  std::optional<std::filesystem::path> polls_path;
  std::optional<std::map<std::string, double>> results;  // official shares, fractions
  std::filesystem::path output_dir = "out";
  unsigned jobs = 1;
  bool clamp = true;

  // The parameter block recorded in every report, without paths or jobs so
  // that reports stay identical across machines and thread counts.
  nlohmann::ordered_json parameters() const;
};

RunConfig parse_run_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

// An error tagged with the pipeline stage it came from and the process exit
// code it maps to: 1 usage/config, 2 empty data, 3 computation or I/O.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& message, int exit_code)
      : Error("[" + stage + "] " + message), stage_(std::move(stage)), exit_code_(exit_code) {}
  const std::string& stage() const noexcept { return stage_; }
  int exit_code() const noexcept { return exit_code_; }

 private:
  std::string stage_;
  int exit_code_;
};

int exit_code_for(const std::exception& e);

using WarningSink = std::function<void(const std::string&)>;

struct FetchResult {
  std::size_t articles = 0;
  std::filesystem::path cache;
};
// Queries the news API for [analysis_start, analysis_end] and stores the
// result at corpus_path. The key is read from SBS_NEWS_API_KEY.
FetchResult run_fetch(const RunConfig& config);

// Writes sbs_timeseries.csv and sbs_summary.json to output_dir.
SbsSeries run_score(const RunConfig& config, const WarningSink& warn = {});

struct ForecastRun {
  WeekWindow week;
  std::vector<ForecastShare> forecasts;
  std::vector<EvalReport> evaluations;
};
// Reads the stored time series and forecasts the week at `lag` for every
// basis (or just `basis`). Writes forecast_lag<N>.json and, when official
// results are configured, eval_lag<N>_<basis>.csv.
ForecastRun run_forecast(const RunConfig& config, int lag, std::optional<Basis> basis = std::nullopt,
                         const WarningSink& warn = {});

// MAPE/MAE of every basis for every scored week; writes evaluation.csv.
std::vector<EvalReport> run_evaluate(const RunConfig& config, const WarningSink& warn = {});

// Long-format plot_data.csv from the stored time series.
std::size_t emit_plot_data(const RunConfig& config);

// Runs `fn`, turning any library error into a StageError for `stage`.
template <typename Fn>
auto with_stage(const std::string& stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what(), exit_code_for(e));
  }
}

}  // namespace sbs
