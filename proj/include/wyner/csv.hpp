#pragma once
#include <filesystem>
#include <string>
#include <vector>

namespace wyner {

// One row of the curve CSV contract:
// header "x,value,ci_low,ci_high,kind,series", UTF-8, LF endings, full double
// precision (17 significant digits).
struct CsvRow {
  double x = 0.0;
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::string kind;
  std::string series;
};

std::string format_double(double v);  // shortest 17-significant-digit form

void write_csv(const std::filesystem::path& path, const std::vector<CsvRow>& rows);

std::vector<CsvRow> read_csv(const std::filesystem::path& path);

}  // namespace wyner
