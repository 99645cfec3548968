#include "sbs/date.hpp"

#include <charconv>

#include <fmt/format.h>

#include "sbs/error.hpp"

namespace sbs {
namespace {

template <typename T>
bool parse_digits(std::string_view text, T& out) {
  if (text.empty()) return false;
  for (char c : text)
    if (c < '0' || c > '9') return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                        std::chrono::day{day}};
  if (!ymd.ok()) throw ConfigError(fmt::format("invalid date {:04}-{:02}-{:02}", year, month, day));
  return Date{std::chrono::sys_days{ymd}};
}

Date Date::parse(std::string_view text) {
  int y = 0;
  unsigned m = 0, d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !parse_digits(text.substr(0, 4), y) ||
      !parse_digits(text.substr(5, 2), m) || !parse_digits(text.substr(8, 2), d))
    throw ParseError("expected date YYYY-MM-DD, got '" + std::string(text) + "'");
  const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) throw ParseError("not a calendar date: '" + std::string(text) + "'");
  return Date{std::chrono::sys_days{ymd}};
}

unsigned Date::iso_weekday() const { return std::chrono::weekday{days_}.iso_encoding(); }

IsoWeek Date::iso_week() const {
  // The ISO year is the calendar year of the Thursday in the same week.
  const Date thursday = *this + (4 - static_cast<int>(iso_weekday()));
  const auto year = thursday.ymd().year();
  const Date jan1{std::chrono::sys_days{year / std::chrono::January / 1}};
  return IsoWeek{static_cast<int>(year), (thursday - jan1) / 7 + 1};
}

Date Date::monday_of(IsoWeek week) {
  // January 4th is always in ISO week 1.
  const Date jan4{std::chrono::sys_days{std::chrono::year{week.year} / std::chrono::January / 4}};
  const Date week1_monday = jan4 - (static_cast<int>(jan4.iso_weekday()) - 1);
  return week1_monday + 7 * (week.week - 1);
}

std::string Date::to_string() const {
  const auto ymd = this->ymd();
  return fmt::format("{:04}-{:02}-{:02}", static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                     static_cast<unsigned>(ymd.day()));
}

std::string format_iso_week(IsoWeek week) { return fmt::format("{:04}-W{:02}", week.year, week.week); }

IsoWeek parse_iso_week(std::string_view text) {
  IsoWeek w;
  if (text.size() != 8 || text[4] != '-' || text[5] != 'W' || !parse_digits(text.substr(0, 4), w.year) ||
      !parse_digits(text.substr(6, 2), w.week) || w.week < 1 || w.week > 53)
    throw ParseError("expected ISO week YYYY-Www, got '" + std::string(text) + "'");
  if (Date::monday_of(w).iso_week() != w)
    throw ParseError("year " + std::to_string(w.year) + " has no week " + std::to_string(w.week));
  return w;
}

}  // namespace sbs
