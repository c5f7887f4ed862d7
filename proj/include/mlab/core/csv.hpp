#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace mlab {

// All floating-point cells are written with 17 significant digits so that
// files round-trip bit-exactly.
std::string format_double(double v);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void begin_row();
  void cell(double v);
  void cell(std::int64_t v);
  void cell(std::uint64_t v);
  void cell(const std::string& v);
  void end_row();

  // Convenience for all-double rows.
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
  std::size_t n_cols_ = 0;
  std::size_t col_ = 0;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col_index(const std::string& name) const;  // throws if absent
};

CsvTable read_csv(const std::string& path);

}  // namespace mlab
