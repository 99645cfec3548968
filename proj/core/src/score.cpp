#include "sbs/score.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <fmt/format.h>

#include "sbs/csv.hpp"
#include "sbs/error.hpp"

namespace sbs {

std::vector<double> standardize(std::span<const double> values, std::string_view dimension) {
  if (values.size() < 2)
    throw DegenerateWindowError(std::string(dimension), "needs at least two relevant terms, got " +
                                                            std::to_string(values.size()));
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / n);
  if (!(sd > 0.0) || !std::isfinite(sd)) throw DegenerateWindowError(std::string(dimension), "has zero variance");
  std::vector<double> z;
  z.reserve(values.size());
  for (double v : values) z.push_back((v - mean) / sd);
  return z;
}

std::map<std::string, double> standardize(const std::map<std::string, double>& values,
                                          std::span<const std::string> relevant,
                                          std::string_view dimension) {
  std::vector<double> x;
  x.reserve(relevant.size());
  for (const auto& t : relevant) {
    auto it = values.find(t);
    x.push_back(it == values.end() ? 0.0 : it->second);
  }
  const auto z = standardize(x, dimension);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < relevant.size(); ++i) out[relevant[i]] = z[i];
  return out;
}

std::vector<std::string> relevant_set(const WordNetwork& pruned, std::span<const std::string> brands) {
  std::vector<std::string> set = pruned.nodes();
  set.insert(set.end(), brands.begin(), brands.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

SbsWeek compute_sbs(std::span<const TokenDoc> docs, const WordNetwork& pruned,
                    std::span<const std::string> brands, const WeekWindow& week, unsigned jobs) {
  const auto relevant = relevant_set(pruned, brands);
  const auto counts = prevalence_counts(docs);
  const auto betweenness = weighted_betweenness(pruned, jobs);

  std::vector<RawScores> raw(relevant.size());
  std::vector<double> prev(relevant.size()), div(relevant.size()), conn(relevant.size());
  for (std::size_t i = 0; i < relevant.size(); ++i) {
    if (auto it = counts.find(relevant[i]); it != counts.end()) raw[i].prevalence = it->second;
    if (auto node = pruned.find(relevant[i])) {
      raw[i].diversity = pruned.degree(*node);
      raw[i].connectivity = betweenness[*node];
    }
    prev[i] = static_cast<double>(raw[i].prevalence);
    div[i] = static_cast<double>(raw[i].diversity);
    conn[i] = raw[i].connectivity;
  }
  const auto zp = standardize(prev, "prevalence");
  const auto zd = standardize(div, "diversity");
  const auto zc = standardize(conn, "connectivity");

  SbsWeek out;
  for (const auto& brand : brands) {
    const auto i = static_cast<std::size_t>(std::lower_bound(relevant.begin(), relevant.end(), brand) -
                                            relevant.begin());
    SbsScore s{brand, week, raw[i], zp[i], zd[i], zc[i], zp[i] + zd[i] + zc[i]};
    if (s.raw.prevalence == 0)
      out.warnings.push_back(fmt::format("{}: brand '{}' does not occur in this window", week.label(), brand));
    out.scores.emplace(brand, std::move(s));
  }
  return out;
}

const SbsRow* SbsSeries::find_lag(int lag) const {
  for (const auto& r : rows)
    if (r.week.lag == lag) return &r;
  return nullptr;
}

std::vector<std::string> SbsSeries::week_labels() const {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(fmt::format("{} (lag {})", r.week.label(), r.week.lag));
  return out;
}

SbsSeries sbs_timeseries(const WeeklyDocs& weekly, std::span<const std::string> brands,
                         const GraphConfig& graph, unsigned jobs) {
  graph.validate();
  SbsSeries series;
  series.brands.assign(brands.begin(), brands.end());
  for (const auto& [week, docs] : weekly) {
    SbsRow row{week, std::nullopt, {}};
    if (docs.empty()) {
      row.absent_reason = "no articles";
    } else {
      const auto pruned = prune(build_cooccurrence(docs, graph.window, jobs), graph.prune_min);
      try {
        auto result = compute_sbs(docs, pruned, brands, week, jobs);
        row.scores = std::move(result.scores);
        for (auto& w : result.warnings) series.warnings.push_back(std::move(w));
      } catch (const DegenerateWindowError& e) {
        row.absent_reason = e.what();
        series.warnings.push_back(fmt::format("{}: {}", week.label(), e.what()));
      }
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

void write_sbs_csv(std::ostream& out, const SbsSeries& series) {
  CsvWriter csv(out);
  csv.row({"week_iso", "brand", "prevalence", "diversity", "connectivity", "z_prevalence", "z_diversity",
           "z_connectivity", "sbs"});
  for (const auto& row : series.rows) {
    const auto label = row.week.label();
    for (const auto& brand : series.brands) {
      if (!row.scores) {
        csv.row({label, brand, "", "", "", "", "", "", ""});
        continue;
      }
      const auto& s = row.scores->at(brand);
      csv.row({label, brand, std::to_string(s.raw.prevalence), std::to_string(s.raw.diversity),
               fmt::format("{}", s.raw.connectivity), fmt::format("{}", s.z_prevalence),
               fmt::format("{}", s.z_diversity), fmt::format("{}", s.z_connectivity),
               fmt::format("{}", s.composite)});
    }
  }
}

SbsSeries read_sbs_csv(std::istream& in, Date voting_day) {
  const auto table = read_csv(in);
  const std::size_t c_week = table.column("week_iso"), c_brand = table.column("brand"),
                    c_prev = table.column("prevalence"), c_div = table.column("diversity"),
                    c_conn = table.column("connectivity"), c_zp = table.column("z_prevalence"),
                    c_zd = table.column("z_diversity"), c_zc = table.column("z_connectivity"),
                    c_sbs = table.column("sbs");
  SbsSeries series;
  std::map<WeekWindow, SbsRow> rows;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& f = table.rows[r];
    const std::size_t line = table.lines[r];
    IsoWeek iso;
    try {
      iso = parse_iso_week(f[c_week]);
    } catch (const Error& e) {
      throw ParseError(e.what(), line);
    }
    const WeekWindow week = week_of(Date::monday_of(iso), voting_day);
    const std::string& brand = f[c_brand];
    if (std::find(series.brands.begin(), series.brands.end(), brand) == series.brands.end())
      series.brands.push_back(brand);
    auto& row = rows.try_emplace(week, SbsRow{week, std::nullopt, {}}).first->second;
    if (f[c_sbs].empty()) {
      if (row.scores) throw ParseError("week " + f[c_week] + " is both present and absent", line);
      row.absent_reason = "absent in source";
      continue;
    }
    if (!row.scores) {
      if (!row.absent_reason.empty()) throw ParseError("week " + f[c_week] + " is both present and absent", line);
      row.scores.emplace();
    }
    SbsScore s;
    s.brand = brand;
    s.week = week;
    s.raw.prevalence = static_cast<std::uint64_t>(parse_int(f[c_prev], line));
    s.raw.diversity = static_cast<std::uint64_t>(parse_int(f[c_div], line));
    s.raw.connectivity = parse_double(f[c_conn], line);
    s.z_prevalence = parse_double(f[c_zp], line);
    s.z_diversity = parse_double(f[c_zd], line);
    s.z_connectivity = parse_double(f[c_zc], line);
    s.composite = parse_double(f[c_sbs], line);
    if (!row.scores->emplace(brand, std::move(s)).second)
      throw ParseError("duplicate row for " + brand + " in " + f[c_week], line);
  }
  for (auto& [week, row] : rows) {
    if (row.scores && row.scores->size() != series.brands.size())
      throw ParseError("week " + week.label() + " does not list every brand");
    series.rows.push_back(std::move(row));
  }
  return series;
}

SbsSeries read_sbs_csv(const std::filesystem::path& path, Date voting_day) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError("cannot open SBS time series " + path.string());
  return read_sbs_csv(in, voting_day);
}

}  // namespace sbs
