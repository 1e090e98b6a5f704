#include "wyner/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wyner {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<CsvRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
  out << "x,value,ci_low,ci_high,kind,series\n";
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.value) << ',' << format_double(r.ci_low)
        << ',' << format_double(r.ci_high) << ',' << r.kind << ',' << r.series << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path.string());
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty file " + path.string());
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    CsvRow r;
    std::getline(ss, field, ',');
    r.x = std::stod(field);
    std::getline(ss, field, ',');
    r.value = std::stod(field);
    std::getline(ss, field, ',');
    r.ci_low = std::stod(field);
    std::getline(ss, field, ',');
    r.ci_high = std::stod(field);
    std::getline(ss, r.kind, ',');
    std::getline(ss, r.series);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace wyner
