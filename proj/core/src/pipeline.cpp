#include "sbs/pipeline.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "sbs/csv.hpp"
#include "sbs/error.hpp"
#include "sbs/report.hpp"

namespace sbs {
namespace fs = std::filesystem;

namespace {

const char* kSeriesFile = "sbs_timeseries.csv";

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config: '") + key + "' has the wrong type");
  }
}

const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) throw ConfigError(std::string("config: missing '") + key + "'");
  return j[key];
}

Date date_field(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_string()) throw ConfigError(std::string("config: '") + key + "' must be a YYYY-MM-DD string");
  try {
    return Date::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(std::string("config: '") + key + "': " + e.what());
  }
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

fs::path existing(const fs::path& base, const std::string& p, const char* what) {
  auto path = resolve(base, p);
  if (!fs::exists(path)) throw ConfigError(fmt::format("config: {} '{}' does not exist", what, path.string()));
  return path;
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ComputationError("cannot write " + path.string());
  out << text;
  if (!out) throw ComputationError("failed writing " + path.string());
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void emit(const WarningSink& warn, const std::string& message) {
  if (warn) warn(message);
}

SbsSeries load_series(const RunConfig& config) {
  const auto path = config.output_dir / kSeriesFile;
  if (!fs::exists(path)) throw NotFoundError("no SBS time series at " + path.string() + "; run 'score' first");
  return read_sbs_csv(path, config.event.voting_day);
}

std::string available_weeks(const SbsSeries& series) {
  std::string out;
  for (const auto& row : series.rows) {
    if (!out.empty()) out += ", ";
    out += fmt::format("{} (lag {}{})", row.week.label(), row.week.lag, row.scores ? "" : ", absent");
  }
  return out.empty() ? "none" : out;
}

std::vector<ForecastShare> forecasts_for(const RunConfig& config, const SbsRow& row, std::optional<Basis> only,
                                         const WarningSink& warn) {
  const ClampPolicy clamp{config.clamp, 0.01};
  std::vector<ForecastShare> out;
  for (Basis b : kScoreBases) {
    if (only && *only != b) continue;
    auto f = forecast_shares(basis_scores(*row.scores, b), b, clamp, row.week);
    for (const auto& w : f.warnings) emit(warn, fmt::format("{}: {}", row.week.label(), w));
    out.push_back(std::move(f));
  }
  if ((!only || *only == Basis::poll_average) && !config.event.poll_records.empty()) {
    auto polls = average_polls(config.event.poll_records, row.week, config.event.voting_day,
                               config.event.tracked_brands);
    if (polls)
      out.push_back(std::move(*polls));
    else
      emit(warn, fmt::format("{}: no complete poll set this week; poll_average omitted", row.week.label()));
  }
  return out;
}

}  // namespace

nlohmann::ordered_json RunConfig::parameters() const {
  nlohmann::ordered_json j;
  j["voting_day"] = event.voting_day.to_string();
  j["analysis_start"] = event.analysis_start.to_string();
  j["analysis_end"] = event.analysis_end.to_string();
  j["tracked_brands"] = event.tracked_brands;
  j["week_definition"] = "iso8601";
  j["truncate_fraction"] = prep.truncate_fraction;
  j["stemmer_language"] = prep.stemmer_language;
  j["stopword_count"] = prep.stopwords.size();
  j["drop_numeric"] = prep.drop_numeric;
  j["window"] = graph.window;
  j["prune_min"] = graph.prune_min;
  j["standardization"] = "population z-score over pruned nodes and tracked brands";
  j["betweenness"] = "brandes, arc length 1/w, unordered pairs, unnormalized";
  j["clamp"] = clamp;
  j["clamp_floor"] = 0.01;
  j["poll_average"] = "per-option mean renormalized over tracked options";
  return j;
}

RunConfig parse_run_config(const nlohmann::json& j, const fs::path& base) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  RunConfig c;
  const auto& ev = require(j, "event");
  c.event.voting_day = date_field(ev, "voting_day");
  c.event.analysis_start = date_field(ev, "analysis_start");
  c.event.analysis_end = date_field(ev, "analysis_end");
  c.event.tracked_brands = get_or<std::vector<std::string>>(ev, "tracked_brands", {});
  c.event.keywords = get_or<std::vector<std::string>>(ev, "keywords", {});
  c.event.validate();

  const auto& lexicon = require(j, "lexicon");
  if (!lexicon.is_string()) throw ConfigError("config: 'lexicon' must be a path");
  c.lexicon_path = existing(base, lexicon.get<std::string>(), "lexicon");
  if (auto s = get_or<std::string>(j, "stopwords", ""); !s.empty()) {
    c.stopwords_path = existing(base, s, "stopword file");
    c.prep.stopwords = load_stopwords(*c.stopwords_path);
  }
  if (j.contains("prep")) {
    const auto& p = j["prep"];
    c.prep.stemmer_language = get_or<std::string>(p, "stemmer_language", c.prep.stemmer_language);
    c.prep.truncate_fraction = get_or<double>(p, "truncate_fraction", c.prep.truncate_fraction);
    c.prep.drop_numeric = get_or<bool>(p, "drop_numeric", c.prep.drop_numeric);
  }
  c.prep.validate();
  if (j.contains("graph")) {
    c.graph.window = get_or<int>(j["graph"], "window", c.graph.window);
    c.graph.prune_min = get_or<int>(j["graph"], "prune_min", c.graph.prune_min);
  }
  c.graph.validate();

  const auto& corpus = require(j, "corpus");
  if (!corpus.is_string()) throw ConfigError("config: 'corpus' must be a path");
  c.corpus_path = resolve(base, corpus.get<std::string>());
  if (j.contains("fetch")) {
    const auto& f = j["fetch"];
    FetchSettings s;
    s.endpoint = get_or<std::string>(f, "endpoint", s.endpoint);
    if (auto lang = get_or<std::string>(f, "language", ""); !lang.empty()) s.language = lang;
    s.page_size = get_or<int>(f, "page_size", s.page_size);
    s.max_retries = get_or<int>(f, "max_retries", s.max_retries);
    c.fetch = s;
  }
  if (auto p = get_or<std::string>(j, "polls", ""); !p.empty()) {
    c.polls_path = existing(base, p, "poll file");
    c.event.poll_records = read_polls_csv(*c.polls_path);
  }
  if (j.contains("results")) {
    c.results = get_or<std::map<std::string, double>>(j, "results", {});
    for (const auto& [option, share] : *c.results)
      if (share < 0.0 || share > 1.0)
        throw ConfigError("config: result for '" + option + "' must be a fraction in [0, 1]");
  }
  c.output_dir = resolve(base, get_or<std::string>(j, "output_dir", "out"));
  const int jobs = get_or<int>(j, "jobs", 1);
  if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
  c.jobs = static_cast<unsigned>(jobs);
  c.clamp = get_or<bool>(j, "clamp", true);
  return c;
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return parse_run_config(j, path.parent_path());
}

int exit_code_for(const std::exception& e) {
  if (const auto* s = dynamic_cast<const StageError*>(&e)) return s->exit_code();
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const NotFoundError*>(&e))
    return 1;
  if (dynamic_cast<const EmptyDataError*>(&e)) return 2;
  return 3;
}

FetchResult run_fetch(const RunConfig& config) {
  FetchOptions o;
  const FetchSettings settings = config.fetch.value_or(FetchSettings{});
  const char* key = std::getenv(kApiKeyEnv);
  if (!key || !*key) throw ConfigError(std::string("set ") + kApiKeyEnv + " to fetch articles");
  o.endpoint = settings.endpoint;
  o.language = settings.language;
  o.page_size = settings.page_size;
  o.max_retries = settings.max_retries;
  o.api_key = key;
  o.keywords = config.event.keywords;
  o.range = {config.event.analysis_start, config.event.analysis_end + 1};
  o.cache_path = config.corpus_path;
  const auto articles = fetch_news(o);
  return {articles.size(), config.corpus_path};
}

SbsSeries run_score(const RunConfig& config, const WarningSink& warn) {
  const auto weekly_articles = with_stage("ingest", [&] {
    if (!fs::exists(config.corpus_path)) throw NotFoundError("corpus " + config.corpus_path.string() + " not found");
    const auto articles = filter_period(read_jsonl(config.corpus_path), config.event);
    if (articles.empty()) throw EmptyDataError("no articles in analysis period");
    auto grouped = group_by_week(articles, config.event);
    // Keep empty weeks so they show up as absent.
    for (const auto& w : analysis_weeks(config.event)) grouped.try_emplace(w);
    return grouped;
  });

  const auto weekly_docs = with_stage("textprep", [&] {
    const Preprocessor prep(BrandLexicon::load(config.lexicon_path), config.prep);
    for (const auto& brand : config.event.tracked_brands)
      if (!prep.lexicon().is_canonical(brand))
        emit(warn, "tracked brand '" + brand + "' is not a canonical lexicon token; it will be stemmed");
    WeeklyDocs docs;
    for (auto& d : prep.run(weekly_articles, config.jobs)) docs[d.week].push_back(std::move(d));
    for (const auto& [week, _] : weekly_articles) docs.try_emplace(week);
    return docs;
  });

  auto series = with_stage("sbs", [&] {
    return sbs_timeseries(weekly_docs, config.event.tracked_brands, config.graph, config.jobs);
  });
  for (const auto& w : series.warnings) emit(warn, w);

  with_stage("report", [&] {
    std::ostringstream csv;
    write_sbs_csv(csv, series);
    write_text(config.output_dir / kSeriesFile, csv.str());

    nlohmann::ordered_json summary;
    summary["parameters"] = config.parameters();
    std::size_t total = 0;
    auto& weeks = summary["weeks"] = nlohmann::ordered_json::array();
    for (const auto& row : series.rows) {
      const auto n = weekly_articles.at(row.week).size();
      total += n;
      nlohmann::ordered_json w{{"week", row.week.label()}, {"lag", row.week.lag}, {"articles", n}};
      if (row.scores) {
        auto& sbs = w["sbs"] = nlohmann::ordered_json::object();
        for (const auto& brand : series.brands) sbs[brand] = row.scores->at(brand).composite;
      } else {
        w["absent"] = row.absent_reason;
      }
      weeks.push_back(std::move(w));
    }
    summary["articles"] = total;
    summary["warnings"] = series.warnings;
    write_text(config.output_dir / "sbs_summary.json", dump(summary));
  });
  return series;
}

ForecastRun run_forecast(const RunConfig& config, int lag, std::optional<Basis> basis, const WarningSink& warn) {
  const auto series = with_stage("forecast", [&] { return load_series(config); });
  return with_stage("forecast", [&] {
    const SbsRow* row = series.find_lag(lag);
    if (!row) throw NotFoundError(fmt::format("no week at lag {}; available: {}", lag, available_weeks(series)));
    if (!row->scores)
      throw NotFoundError(fmt::format("week {} (lag {}) has no scores ({}); available: {}", row->week.label(), lag,
                                      row->absent_reason, available_weeks(series)));
    ForecastRun run{row->week, forecasts_for(config, *row, basis, warn), {}};
    if (basis == Basis::poll_average && run.forecasts.empty())
      throw NotFoundError(fmt::format("no poll average available for {}", row->week.label()));

    nlohmann::ordered_json j;
    j["parameters"] = config.parameters();
    j["week"] = row->week.label();
    j["lag"] = lag;
    auto& fj = j["forecasts"] = nlohmann::ordered_json::array();
    for (const auto& f : run.forecasts) fj.push_back(forecast_to_json(f));
    if (config.results) {
      const auto outcome = adjust_actuals(*config.results, config.event.tracked_brands);
      auto& ej = j["evaluations"] = nlohmann::ordered_json::array();
      for (const auto& f : run.forecasts) {
        auto report = evaluate(f, outcome);
        ej.push_back(eval_to_json(report));
        std::ostringstream csv;
        write_eval_csv(csv, report);
        write_text(config.output_dir / fmt::format("eval_lag{}_{}.csv", lag, to_string(f.basis)), csv.str());
        run.evaluations.push_back(std::move(report));
      }
    }
    write_text(config.output_dir / fmt::format("forecast_lag{}.json", lag), dump(j));
    return run;
  });
}

std::vector<EvalReport> run_evaluate(const RunConfig& config, const WarningSink& warn) {
  const auto series = with_stage("evaluate", [&] { return load_series(config); });
  return with_stage("evaluate", [&] {
    if (!config.results) throw ConfigError("evaluate needs official 'results' in the config");
    const auto outcome = adjust_actuals(*config.results, config.event.tracked_brands);
    std::vector<EvalReport> reports;
    std::ostringstream csv_text;
    CsvWriter csv(csv_text);
    csv.row({"week_iso", "lag", "basis", "mape", "mae_pp", "n_misranked"});
    for (const auto& row : series.rows) {
      if (!row.scores) {
        emit(warn, fmt::format("{}: absent ({}), skipped", row.week.label(), row.absent_reason));
        continue;
      }
      for (const auto& f : forecasts_for(config, row, std::nullopt, warn)) {
        auto r = evaluate(f, outcome);
        csv.row({row.week.label(), std::to_string(row.week.lag), std::string(to_string(r.basis)),
                 fmt::format("{:.4f}", r.mape * 100.0), fmt::format("{:.4f}", r.mae * 100.0),
                 std::to_string(r.n_misranked)});
        reports.push_back(std::move(r));
      }
    }
    write_text(config.output_dir / "evaluation.csv", csv_text.str());
    return reports;
  });
}

std::size_t emit_plot_data(const RunConfig& config) {
  const auto series = with_stage("plot-data", [&] { return load_series(config); });
  return with_stage("plot-data", [&] {
    const auto points = plot_points(series);
    if (points.empty()) throw EmptyDataError("time series has no scored weeks");
    std::ostringstream csv;
    write_plot_csv(csv, points);
    write_text(config.output_dir / "plot_data.csv", csv.str());
    return points.size();
  });
}

}  // namespace sbs
