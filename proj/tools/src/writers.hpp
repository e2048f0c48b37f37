#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "config.hpp"

namespace hlabtool {

// Full-precision scientific formatting (17 significant digits); prints
// "inf"/"nan" for non-finite values.
std::string sig17(double x);

// Writes to a temp file in the target directory, then renames: readers
// never observe a partial file.
void atomic_write_text(const std::filesystem::path& path,
                       const std::string& content);

nlohmann::json config_to_json(const Config& cfg);

// CSV with a comment preamble carrying the artifact version and the full
// resolved configuration, then a header row and data rows.
class CsvWriter {
 public:
  CsvWriter(const Config& cfg, std::vector<std::string> header);
  void row(const std::vector<std::string>& cells);
  void write(const std::filesystem::path& path) const;

 private:
  std::string text_;
  std::size_t columns_;
};

// JSON summary skeleton: artifact version, subcommand, resolved config, and
// a partial-results flag; callers fill result fields before writing.
nlohmann::json summary_skeleton(const std::string& subcommand,
                                const Config& cfg);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace hlabtool
