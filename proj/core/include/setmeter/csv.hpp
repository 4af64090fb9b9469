#pragma once

// Point-cloud ingestion: one point per row, rational ("3/4") or decimal
// ("0.25") literals, configurable delimiter, optional header row. Decimals
// convert to exact rationals. Parse failures carry the 1-based line number.

#include <filesystem>
#include <string_view>

#include "setmeter/set_model.hpp"

namespace setmeter {

struct CsvOptions {
  char delimiter = ',';
  bool header = false;
};

FinitePoints parse_points_csv(std::string_view text,
                              const CsvOptions& options = {});

FinitePoints read_points_csv(const std::filesystem::path& path,
                             const CsvOptions& options = {});

void write_points_csv(const std::filesystem::path& path,
                      const FinitePoints& points, char delimiter = ',');

}  // namespace setmeter
