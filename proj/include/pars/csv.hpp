#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace pars {

// %.17g rendering so values survive a text round trip and reruns with the
// same seed produce byte-identical files.
std::string format_double(double v);

// Minimal CSV emitter: comma separators, one header row, LF line endings.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  CsvWriter& cell(double v);
  CsvWriter& cell(std::uint64_t v);
  CsvWriter& cell(std::int64_t v);
  CsvWriter& cell(const std::string& v);
  void end_row();

 private:
  void sep();

  std::ofstream out_;
  std::size_t columns_ = 0;
  std::size_t in_row_ = 0;
};

}  // namespace pars
