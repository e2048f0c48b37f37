#include "writers.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "hlab/version.hpp"

namespace hlabtool {

std::string sig17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void atomic_write_text(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush())
      throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

nlohmann::json config_to_json(const Config& cfg) {
  nlohmann::json out = nlohmann::json::object();
  auto value_json = [](const Value& v) -> nlohmann::json {
    switch (v.kind) {
      case Value::Kind::Number: return v.num;
      case Value::Kind::Boolean: return v.flag;
      case Value::Kind::String: return v.str;
      default: return v.list;
    }
  };
  for (const auto& [sec, table] : cfg.sections) {
    if (sec.empty()) {
      for (const auto& [key, value] : table) out[key] = value_json(value);
    } else {
      nlohmann::json t = nlohmann::json::object();
      for (const auto& [key, value] : table) t[key] = value_json(value);
      out[sec] = std::move(t);
    }
  }
  return out;
}

CsvWriter::CsvWriter(const Config& cfg, std::vector<std::string> header)
    : columns_(header.size()) {
  text_ += "# artifact_version = ";
  text_ += hlab::version;
  text_ += "\n# config = ";
  text_ += config_to_json(cfg).dump();
  text_ += "\n";
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) text_ += ",";
    text_ += header[i];
  }
  text_ += "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_)
    throw std::logic_error("csv row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ",";
    text_ += cells[i];
  }
  text_ += "\n";
}

void CsvWriter::write(const std::filesystem::path& path) const {
  atomic_write_text(path, text_);
}

nlohmann::json summary_skeleton(const std::string& subcommand,
                                const Config& cfg) {
  nlohmann::json j;
  j["artifact_version"] = hlab::version;
  j["subcommand"] = subcommand;
  j["config"] = config_to_json(cfg);
  j["partial"] = false;
  return j;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  atomic_write_text(path, j.dump(2) + "\n");
}

}  // namespace hlabtool
