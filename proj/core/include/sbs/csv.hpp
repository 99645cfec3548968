#pragma once

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sbs {

// RFC 4180 writer: fields containing ',', '"' or a line break are quoted.
// Lines end with '\n'.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(std::initializer_list<std::string_view> fields);
  void row(const std::vector<std::string>& fields);

 private:
  void field(std::string_view f, bool first);
  std::ostream& out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;  // 1-based source line of each row

  // Index of a header column. Throws ParseError naming the missing column.
  std::size_t column(std::string_view name) const;
};

// Parses a CSV with a header row. Every row must have the header's width.
// Blank lines are skipped. Throws ParseError with the offending line.
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

// Strict number parsing for CSV cells; throws ParseError.
double parse_double(std::string_view text, std::size_t line = 0);
long long parse_int(std::string_view text, std::size_t line = 0);

}  // namespace sbs
