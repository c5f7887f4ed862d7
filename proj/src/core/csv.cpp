#include "mlab/core/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace mlab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path), n_cols_(header.size()) {
  if (!out_) throw std::runtime_error("CsvWriter: cannot open " + path);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::begin_row() { col_ = 0; }

void CsvWriter::cell(double v) { cell(format_double(v)); }

void CsvWriter::cell(std::int64_t v) { cell(std::to_string(v)); }

void CsvWriter::cell(std::uint64_t v) { cell(std::to_string(v)); }

void CsvWriter::cell(const std::string& v) {
  if (col_ >= n_cols_) throw std::runtime_error("CsvWriter: too many cells");
  if (col_) out_ << ',';
  out_ << v;
  ++col_;
}

void CsvWriter::end_row() {
  if (col_ != n_cols_) throw std::runtime_error("CsvWriter: short row");
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  begin_row();
  for (double v : values) cell(v);
  end_row();
}

std::size_t CsvTable::col_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::runtime_error("CsvTable: missing column " + name);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != table.header.size()) {
        throw std::runtime_error("read_csv: ragged row in " + path);
      }
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace mlab
