#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbs/forecast.hpp"
#include "sbs/score.hpp"

namespace sbs {

// option,actual,adjusted_actual,forecast,abs_error_pp,ape,real_rank,
// forecast_rank followed by MAPE and MAE footer rows. Shares and APE are
// written in percent, errors in percentage points.
void write_eval_csv(std::ostream& out, const EvalReport& report);
nlohmann::ordered_json eval_to_json(const EvalReport& report);

nlohmann::ordered_json forecast_to_json(const ForecastShare& forecast);

struct PlotPoint {
  std::string week;     // "2016-W21"
  std::string brand;
  std::string measure;  // sbs | z_prevalence | z_diversity | z_connectivity
  double value = 0;

  bool operator==(const PlotPoint&) const = default;
};

// Long format, absent weeks omitted.
std::vector<PlotPoint> plot_points(const SbsSeries& series);
void write_plot_csv(std::ostream& out, const std::vector<PlotPoint>& points);
std::vector<PlotPoint> read_plot_csv(std::istream& in);

}  // namespace sbs
