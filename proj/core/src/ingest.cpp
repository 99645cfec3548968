#include "sbs/ingest.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "sbs/error.hpp"

namespace sbs {
namespace {

std::string required_string(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  if (!it->is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return it->get<std::string>();
}

Article parse_article(const std::string& line) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError("expected a JSON object");

  Article a;
  a.id = required_string(obj, "id");
  a.published = Date::parse(required_string(obj, "published"));
  a.title = required_string(obj, "title");
  a.body = required_string(obj, "body");
  a.source = optional_string(obj, "source");
  a.language = optional_string(obj, "language");
  if (a.id.empty()) throw ParseError("empty id");
  if (a.title.empty() && a.body.empty()) throw ParseError("article '" + a.id + "' has no text");
  return a;
}

bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

void EventConfig::validate() const {
  if (!(analysis_start < analysis_end))
    throw ConfigError("analysis_start must precede analysis_end");
  if (!(analysis_end < voting_day))
    throw ConfigError("analysis_end must be before the voting day");
  if (tracked_brands.empty()) throw ConfigError("no tracked brands");
}

std::string WeekWindow::label() const { return format_iso_week(iso()); }

WeekWindow week_of(Date day, Date voting_day) {
  const IsoWeek w = day.iso_week();
  const int lag = (Date::monday_of(voting_day.iso_week()) - Date::monday_of(w)) / 7;
  return WeekWindow{w.year, w.week, lag};
}

std::vector<WeekWindow> analysis_weeks(const EventConfig& config) {
  std::vector<WeekWindow> weeks;
  const Date last = Date::monday_of(config.analysis_end.iso_week());
  for (Date monday = Date::monday_of(config.analysis_start.iso_week()); monday <= last; monday = monday + 7)
    weeks.push_back(week_of(monday, config.voting_day));
  return weeks;
}

std::vector<Article> read_jsonl(std::istream& in) {
  std::vector<Article> articles;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    Article a;
    try {
      a = parse_article(line);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!seen.insert(a.id).second) throw ParseError("duplicate id '" + a.id + "'", line_no);
    articles.push_back(std::move(a));
  }
  return articles;
}

std::vector<Article> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus " + path.string());
  return read_jsonl(in);
}

void write_jsonl(std::ostream& out, std::span<const Article> articles) {
  for (const auto& a : articles) {
    nlohmann::ordered_json obj;
    obj["id"] = a.id;
    obj["published"] = a.published.to_string();
    obj["title"] = a.title;
    obj["body"] = a.body;
    if (a.source) obj["source"] = *a.source;
    if (a.language) obj["language"] = *a.language;
    out << obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
  }
}

void write_jsonl(const std::filesystem::path& path, std::span<const Article> articles) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  write_jsonl(out, articles);
}

std::vector<Article> filter_period(std::span<const Article> articles, const EventConfig& config) {
  std::vector<Article> kept;
  for (const auto& a : articles) {
    if (a.published < config.analysis_start || config.analysis_end < a.published) continue;
    if (a.published == config.voting_day) continue;
    kept.push_back(a);
  }
  return kept;
}

WeeklyArticles group_by_week(std::span<const Article> articles, const EventConfig& config) {
  WeeklyArticles buckets;
  for (const auto& a : articles) buckets[week_of(a.published, config.voting_day)].push_back(a);
  return buckets;
}

}  // namespace sbs
