#pragma once

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace sbs {

struct IsoWeek {
  int year = 0;
  int week = 0;  // 1..53
  auto operator<=>(const IsoWeek&) const = default;
};

// A UTC calendar date with day granularity.
class Date {
 public:
  constexpr Date() = default;
  constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}

  // Throws ConfigError when the triple is not a real calendar date.
  static Date from_ymd(int year, unsigned month, unsigned day);
  // Strict "YYYY-MM-DD". Throws ParseError.
  static Date parse(std::string_view text);
  static Date monday_of(IsoWeek week);

  std::chrono::sys_days days() const { return days_; }
  std::chrono::year_month_day ymd() const { return std::chrono::year_month_day{days_}; }
  // 1 = Monday ... 7 = Sunday.
  unsigned iso_weekday() const;
  IsoWeek iso_week() const;
  std::string to_string() const;

  Date operator+(int n) const { return Date{days_ + std::chrono::days{n}}; }
  Date operator-(int n) const { return Date{days_ - std::chrono::days{n}}; }
  int operator-(Date other) const { return static_cast<int>((days_ - other.days_).count()); }
  auto operator<=>(const Date&) const = default;

 private:
  std::chrono::sys_days days_{};
};

// "2016-W21"
std::string format_iso_week(IsoWeek week);
IsoWeek parse_iso_week(std::string_view text);

}  // namespace sbs
