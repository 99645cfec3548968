#include "sbs/report.hpp"

#include <fmt/format.h>

#include "sbs/csv.hpp"
#include "sbs/error.hpp"

namespace sbs {
namespace {

std::string pct(double fraction) { return fmt::format("{:.4f}", fraction * 100.0); }

}  // namespace

void write_eval_csv(std::ostream& out, const EvalReport& report) {
  CsvWriter csv(out);
  csv.row({"option", "actual", "adjusted_actual", "forecast", "abs_error_pp", "ape", "real_rank", "forecast_rank"});
  for (const auto& r : report.rows)
    csv.row({r.option, pct(r.actual), pct(r.adjusted_actual), pct(r.forecast), pct(r.abs_error), pct(r.ape),
             std::to_string(r.real_rank), std::to_string(r.forecast_rank)});
  csv.row({"MAPE", "", "", "", "", pct(report.mape), "", ""});
  csv.row({"MAE", "", "", "", pct(report.mae), "", "", ""});
}

nlohmann::ordered_json eval_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["week"] = report.week.label();
  j["lag"] = report.week.lag;
  j["basis"] = std::string(to_string(report.basis));
  auto& rows = j["options"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"option", r.option},
                    {"actual", r.actual},
                    {"adjusted_actual", r.adjusted_actual},
                    {"forecast", r.forecast},
                    {"abs_error", r.abs_error},
                    {"ape", r.ape},
                    {"real_rank", r.real_rank},
                    {"forecast_rank", r.forecast_rank}});
  j["mape"] = report.mape;
  j["mae"] = report.mae;
  j["n_misranked"] = report.n_misranked;
  return j;
}

nlohmann::ordered_json forecast_to_json(const ForecastShare& forecast) {
  nlohmann::ordered_json j;
  j["week"] = forecast.week.label();
  j["lag"] = forecast.week.lag;
  j["basis"] = std::string(to_string(forecast.basis));
  auto& shares = j["shares"] = nlohmann::ordered_json::object();
  for (const auto& [option, s] : forecast.shares) shares[option] = s;
  j["warnings"] = forecast.warnings;
  return j;
}

std::vector<PlotPoint> plot_points(const SbsSeries& series) {
  std::vector<PlotPoint> points;
  for (const auto& row : series.rows) {
    if (!row.scores) continue;
    const auto week = row.week.label();
    for (const auto& brand : series.brands) {
      const auto& s = row.scores->at(brand);
      points.push_back({week, brand, "sbs", s.composite});
      points.push_back({week, brand, "z_prevalence", s.z_prevalence});
      points.push_back({week, brand, "z_diversity", s.z_diversity});
      points.push_back({week, brand, "z_connectivity", s.z_connectivity});
    }
  }
  return points;
}

void write_plot_csv(std::ostream& out, const std::vector<PlotPoint>& points) {
  CsvWriter csv(out);
  csv.row({"week", "brand", "measure", "value"});
  for (const auto& p : points) csv.row({p.week, p.brand, p.measure, fmt::format("{}", p.value)});
}

std::vector<PlotPoint> read_plot_csv(std::istream& in) {
  const auto table = read_csv(in);
  const auto c_week = table.column("week"), c_brand = table.column("brand"), c_measure = table.column("measure"),
             c_value = table.column("value");
  std::vector<PlotPoint> points;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& f = table.rows[r];
    points.push_back({f[c_week], f[c_brand], f[c_measure], parse_double(f[c_value], table.lines[r])});
  }
  return points;
}

}  // namespace sbs
