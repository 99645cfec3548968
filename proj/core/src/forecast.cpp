#include "sbs/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <fmt/format.h>

#include "sbs/csv.hpp"
#include "sbs/error.hpp"

namespace sbs {

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::sbs: return "sbs";
    case Basis::prevalence: return "prevalence";
    case Basis::diversity: return "diversity";
    case Basis::connectivity: return "connectivity";
    case Basis::poll_average: return "poll_average";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  for (Basis b : {Basis::sbs, Basis::prevalence, Basis::diversity, Basis::connectivity, Basis::poll_average})
    if (to_string(b) == name) return b;
  throw ConfigError("unknown basis '" + std::string(name) +
                    "' (expected sbs, prevalence, diversity, connectivity or poll_average)");
}

ForecastShare forecast_shares(const std::map<std::string, double>& scores, Basis basis, const ClampPolicy& clamp,
                              const WeekWindow& week) {
  if (scores.empty()) throw ComputationError("no scores to forecast from");
  ForecastShare out{week, basis, {}, {}};
  std::vector<std::string> offenders;
  for (const auto& [option, score] : scores) {
    if (!std::isfinite(score)) throw ComputationError("non-finite score for " + option);
    double s = score;
    if (clamp.enabled && s <= 0.0) {
      out.warnings.push_back(fmt::format("{} score for '{}' is {}; clamped to {}", to_string(basis), option, score,
                                         clamp.floor));
      s = clamp.floor;
    } else if (!clamp.enabled && s <= 0.0) {
      offenders.push_back(option);
    }
    out.shares[option] = s;
  }
  if (!offenders.empty()) throw NonPositiveScoreError(std::move(offenders));
  double total = 0.0;
  for (const auto& [_, s] : out.shares) total += s;
  for (auto& [_, s] : out.shares) s /= total;
  return out;
}

std::map<std::string, double> basis_scores(const std::map<std::string, SbsScore>& scores, Basis basis) {
  std::map<std::string, double> out;
  for (const auto& [brand, s] : scores) {
    switch (basis) {
      case Basis::sbs: out[brand] = s.composite; break;
      case Basis::prevalence: out[brand] = s.z_prevalence; break;
      case Basis::diversity: out[brand] = s.z_diversity; break;
      case Basis::connectivity: out[brand] = s.z_connectivity; break;
      case Basis::poll_average: throw ConfigError("poll_average is not derived from SBS scores");
    }
  }
  return out;
}

ElectionOutcome adjust_actuals(const std::map<std::string, double>& official, std::span<const std::string> tracked) {
  ElectionOutcome out;
  double total = 0.0;
  for (const auto& option : tracked) {
    auto it = official.find(option);
    if (it == official.end()) throw ConfigError("no official result for tracked option '" + option + "'");
    out.official[option] = it->second;
    total += it->second;
  }
  if (!(total > 0.0)) throw ComputationError("tracked official results sum to zero");
  for (const auto& [option, share] : out.official) out.adjusted[option] = share / total;
  return out;
}

double ape(double actual, double forecast) {
  if (!(actual > 0.0)) throw UndefinedApeError(fmt::format("APE is undefined for actual value {}", actual));
  return std::abs(actual - forecast) / actual;
}

double mape(std::span<const ErrorPair> pairs) {
  if (pairs.empty()) throw ComputationError("MAPE of an empty set");
  double sum = 0.0;
  for (const auto& p : pairs) sum += ape(p.actual, p.forecast);
  return sum / static_cast<double>(pairs.size());
}

double mae(std::span<const ErrorPair> pairs) {
  if (pairs.empty()) throw ComputationError("MAE of an empty set");
  double sum = 0.0;
  for (const auto& p : pairs) sum += std::abs(p.actual - p.forecast);
  return sum / static_cast<double>(pairs.size());
}

std::map<std::string, int> rank_by_share(const std::map<std::string, double>& shares) {
  std::vector<std::pair<std::string, double>> v(shares.begin(), shares.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::map<std::string, int> ranks;
  for (std::size_t i = 0; i < v.size(); ++i) ranks[v[i].first] = static_cast<int>(i) + 1;
  return ranks;
}

RankComparison rank_compare(const std::map<std::string, double>& actual, const std::map<std::string, double>& forecast) {
  if (actual.size() != forecast.size() ||
      !std::equal(actual.begin(), actual.end(), forecast.begin(),
                  [](const auto& a, const auto& b) { return a.first == b.first; }))
    throw ConfigError("rank comparison needs the same options on both sides");
  RankComparison rc{rank_by_share(actual), rank_by_share(forecast), 0};
  for (const auto& [option, r] : rc.real)
    if (rc.forecast.at(option) != r) ++rc.n_misranked;
  return rc;
}

std::optional<std::map<std::string, double>> poll_average(std::span<const PollRecord> polls,
                                                          std::span<const std::string> tracked) {
  if (polls.empty()) return std::nullopt;
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& p : polls) {
    auto& [sum, n] = acc[p.option];
    sum += p.share;
    ++n;
  }
  std::map<std::string, double> mean;
  double total = 0.0;
  for (const auto& option : tracked) {
    auto it = acc.find(option);
    if (it == acc.end()) return std::nullopt;
    const double m = it->second.first / it->second.second;
    mean[option] = m;
    total += m;
  }
  if (!(total > 0.0)) return std::nullopt;
  for (auto& [_, m] : mean) m /= total;
  return mean;
}

std::optional<ForecastShare> average_polls(std::span<const PollRecord> polls, const WeekWindow& week, Date voting_day,
                                           std::span<const std::string> tracked) {
  std::vector<PollRecord> in_week;
  for (const auto& p : polls)
    if (p.date < voting_day && week_of(p.date, voting_day).iso() == week.iso()) in_week.push_back(p);
  auto avg = poll_average(in_week, tracked);
  if (!avg) return std::nullopt;
  return ForecastShare{week, Basis::poll_average, std::move(*avg), {}};
}

EvalReport evaluate(const ForecastShare& forecast, const ElectionOutcome& outcome) {
  const auto ranks = rank_compare(outcome.adjusted, forecast.shares);
  EvalReport report;
  report.week = forecast.week;
  report.basis = forecast.basis;
  report.n_misranked = ranks.n_misranked;
  std::vector<ErrorPair> pairs;
  for (const auto& [option, y] : outcome.adjusted) {
    const double y_hat = forecast.shares.at(option);
    report.rows.push_back({option, outcome.official.at(option), y, y_hat, std::abs(y - y_hat), ape(y, y_hat),
                           ranks.real.at(option), ranks.forecast.at(option)});
    pairs.push_back({y, y_hat});
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const EvalRow& a, const EvalRow& b) { return a.real_rank < b.real_rank; });
  report.mape = mape(pairs);
  report.mae = mae(pairs);
  return report;
}

std::vector<PollRecord> read_polls_csv(std::istream& in) {
  const auto table = read_csv(in);
  const auto c_date = table.column("date"), c_option = table.column("option"), c_share = table.column("share");
  std::vector<PollRecord> polls;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& f = table.rows[r];
    const auto line = table.lines[r];
    PollRecord p;
    try {
      p.date = Date::parse(f[c_date]);
    } catch (const Error& e) {
      throw ParseError(e.what(), line);
    }
    p.option = f[c_option];
    if (p.option.empty()) throw ParseError("empty poll option", line);
    p.share = parse_double(f[c_share], line);
    if (p.share < 0.0 || p.share > 1.0) throw ParseError("poll share must be a fraction in [0, 1]", line);
    polls.push_back(std::move(p));
  }
  return polls;
}

std::vector<PollRecord> read_polls_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open poll file " + path.string());
  return read_polls_csv(in);
}

}  // namespace sbs
