#include "sbs/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "sbs/error.hpp"

namespace sbs {

void CsvWriter::field(std::string_view f, bool first) {
  if (!first) out_ << ',';
  if (f.find_first_of(",\"\r\n") == std::string_view::npos) {
    out_ << f;
    return;
  }
  out_ << '"';
  for (char ch : f) {
    if (ch == '"') out_ << '"';
    out_ << ch;
  }
  out_ << '"';
}

void CsvWriter::row(std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto f : fields) {
    field(f, first);
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) field(fields[i], i == 0);
  out_ << '\n';
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ParseError("missing CSV column '" + std::string(name) + "'", 1);
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::vector<std::string> record;
  std::string fieldbuf;
  std::size_t line = 1, record_line = 1;
  bool in_quotes = false, after_quote = false, any = false, have_header = false;

  auto end_record = [&] {
    record.push_back(std::move(fieldbuf));
    fieldbuf.clear();
    const bool blank = record.size() == 1 && record[0].empty() && !any;
    if (!blank) {
      if (!have_header) {
        table.header = std::move(record);
        have_header = true;
      } else {
        if (record.size() != table.header.size())
          throw ParseError("expected " + std::to_string(table.header.size()) + " fields, got " +
                               std::to_string(record.size()),
                           record_line);
        table.rows.push_back(std::move(record));
        table.lines.push_back(record_line);
      }
    }
    record.clear();
    any = false;
  };

  char ch;
  while (in.get(ch)) {
    if (in_quotes) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          fieldbuf += '"';
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (ch == '\n') ++line;
        fieldbuf += ch;
      }
      continue;
    }
    if (ch == '\r') continue;
    if (ch == '\n') {
      end_record();
      after_quote = false;
      record_line = ++line;
      continue;
    }
    if (ch == ',') {
      record.push_back(std::move(fieldbuf));
      fieldbuf.clear();
      after_quote = false;
      any = true;
      continue;
    }
    if (after_quote) throw ParseError("unexpected character after closing quote", line);
    if (ch == '"' && fieldbuf.empty()) {
      in_quotes = true;
      any = true;
      continue;
    }
    fieldbuf += ch;
    any = true;
  }
  if (in_quotes) throw ParseError("unterminated quoted field", record_line);
  if (any || !fieldbuf.empty() || !record.empty()) end_record();
  if (!have_header) throw ParseError("missing CSV header", 1);
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  return read_csv(in);
}

double parse_double(std::string_view text, std::size_t line) {
  double v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ParseError("not a number: '" + std::string(text) + "'", line);
  return v;
}

long long parse_int(std::string_view text, std::size_t line) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ParseError("not an integer: '" + std::string(text) + "'", line);
  return v;
}

}  // namespace sbs
