#include "pars/csv.hpp"

#include <cstdio>

#include "pars/error.hpp"

namespace pars {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary), columns_(header.size()) {
  if (!out_) throw ConfigError("CsvWriter: cannot open " + path);
  if (columns_ == 0) throw DomainError("CsvWriter: header must be non-empty");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::sep() {
  if (in_row_) out_ << ',';
  ++in_row_;
}

CsvWriter& CsvWriter::cell(double v) {
  sep();
  out_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::cell(std::uint64_t v) {
  sep();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::cell(std::int64_t v) {
  sep();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& v) {
  sep();
  out_ << v;
  return *this;
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) {
    throw InvariantViolation("CsvWriter: row width does not match the header");
  }
  out_ << '\n';
  in_row_ = 0;
}

}  // namespace pars
