// sbs: command-line front end for the Semantic Brand Score pipeline.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <iostream>
#include <optional>
#include <string>

#include "sbs/error.hpp"
#include "sbs/pipeline.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<std::string> out;
  std::optional<unsigned> jobs;
  bool no_clamp = false;
  int lag = 1;
  std::optional<std::string> basis;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out, "Output directory (overrides output_dir)");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-clamp", o.no_clamp, "Fail on non-positive scores instead of clamping them");
}

sbs::RunConfig load(const Options& o) {
  auto config = sbs::with_stage("config", [&] { return sbs::load_run_config(o.config); });
  if (o.out) config.output_dir = *o.out;
  if (o.jobs) config.jobs = *o.jobs;
  if (o.no_clamp) config.clamp = false;
  return config;
}

void warn(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

int run(const std::string& command, const Options& o) {
  const auto config = load(o);
  if (command == "fetch") {
    const auto r = sbs::with_stage("fetch", [&] { return sbs::run_fetch(config); });
    fmt::print("fetched {} articles into {}\n", r.articles, r.cache.string());
  } else if (command == "score") {
    const auto series = sbs::run_score(config, warn);
    std::size_t scored = 0;
    for (const auto& row : series.rows) scored += row.scores.has_value();
    fmt::print("scored {} of {} weeks -> {}\n", scored, series.rows.size(),
               (config.output_dir / "sbs_timeseries.csv").string());
  } else if (command == "forecast") {
    std::optional<sbs::Basis> basis;
    if (o.basis) basis = sbs::with_stage("config", [&] { return sbs::parse_basis(*o.basis); });
    const auto run = sbs::run_forecast(config, o.lag, basis, warn);
    fmt::print("forecast for {} (lag {})\n", run.week.label(), run.week.lag);
    for (const auto& f : run.forecasts) {
      fmt::print("  {:<13}", sbs::to_string(f.basis));
      for (const auto& [option, share] : f.shares) fmt::print(" {}={:.2f}%", option, share * 100.0);
      fmt::print("\n");
    }
    for (const auto& e : run.evaluations)
      fmt::print("  {:<13} MAPE {:.2f}%  MAE {:.2f} pp  misranked {}\n", sbs::to_string(e.basis), e.mape * 100.0,
                 e.mae * 100.0, e.n_misranked);
  } else if (command == "evaluate") {
    const auto reports = sbs::run_evaluate(config, warn);
    fmt::print("evaluated {} week/basis combinations -> {}\n", reports.size(),
               (config.output_dir / "evaluation.csv").string());
  } else if (command == "plot-data") {
    const auto n = sbs::emit_plot_data(config);
    fmt::print("wrote {} points -> {}\n", n, (config.output_dir / "plot_data.csv").string());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic Brand Score: news text to vote-share forecasts"};
  app.require_subcommand(1);
  Options o;

  auto* fetch = app.add_subcommand("fetch", "Download articles from the news API into the corpus file");
  auto* score = app.add_subcommand("score", "Compute the weekly SBS time series");
  auto* forecast = app.add_subcommand("forecast", "Forecast vote shares from one week of the series");
  auto* evaluate = app.add_subcommand("evaluate", "MAPE/MAE of every basis for every scored week");
  auto* plot = app.add_subcommand("plot-data", "Export long-format plot data");
  for (auto* cmd : {fetch, score, forecast, evaluate, plot}) add_common(cmd, o);
  forecast->add_option("--lag", o.lag, "Weeks before the voting week (0 = voting week)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  forecast->add_option("--basis", o.basis, "sbs | prevalence | diversity | connectivity | poll_average");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const std::exception& e) {
    std::cerr << "sbs " << command << ": " << e.what() << '\n';
    return sbs::exit_code_for(e);
  }
}
