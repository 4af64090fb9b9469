#include "setmeter/csv.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "setmeter/error.hpp"

namespace setmeter {

FinitePoints parse_points_csv(std::string_view text,
                              const CsvOptions& options) {
  std::vector<Point> rows;
  std::size_t line_no = 0;
  std::size_t arity = 0;
  std::size_t begin = 0;
  bool skipped_header = !options.header;

  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (blank) {
      if (end == text.size()) break;
      continue;
    }
    if (!skipped_header) {
      skipped_header = true;
      continue;
    }

    Point row;
    std::size_t field_begin = 0;
    while (true) {
      std::size_t field_end = line.find(options.delimiter, field_begin);
      std::string_view field =
          line.substr(field_begin, field_end == std::string_view::npos
                                       ? std::string_view::npos
                                       : field_end - field_begin);
      try {
        row.push_back(parse_rational(field));
      } catch (const Error& e) {
        fail(errc::parse_error,
             "line " + std::to_string(line_no) + ": " + e.what());
      }
      if (field_end == std::string_view::npos) break;
      field_begin = field_end + 1;
    }

    if (arity == 0) {
      arity = row.size();
    } else if (row.size() != arity) {
      fail(errc::parse_error,
           "line " + std::to_string(line_no) + ": expected " +
               std::to_string(arity) + " fields, got " +
               std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }

  if (rows.empty()) {
    fail(errc::parse_error, "no data rows");
  }
  return FinitePoints(static_cast<int>(arity), std::move(rows));
}

FinitePoints read_points_csv(const std::filesystem::path& path,
                             const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(errc::parse_error, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_points_csv(buffer.str(), options);
  } catch (const Error& e) {
    if (e.code() == errc::parse_error) {
      fail(errc::parse_error, path.string() + ": " + e.what());
    }
    throw;
  }
}

void write_points_csv(const std::filesystem::path& path,
                      const FinitePoints& points, char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(errc::invalid_config, "cannot write '" + path.string() + "'");
  }
  for (const Point& p : points.points()) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c) out << delimiter;
      out << to_text(p[c]);
    }
    out << '\n';
  }
}

}  // namespace setmeter
