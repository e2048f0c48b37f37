#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlabtool {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One configuration value: number, boolean, quoted or bare string, or a
// bracketed list of numbers.
struct Value {
  enum class Kind { Number, Boolean, String, List };
  Kind kind = Kind::Number;
  double num = 0.0;
  bool flag = false;
  std::string str;
  std::vector<double> list;

  static Value number(double x);
  static Value boolean(bool b);
  static Value string(std::string s);
  static Value numbers(std::vector<double> xs);

  std::string render() const;  // value in config-file syntax
};

using Table = std::map<std::string, Value>;

// Sectioned key/value configuration.  The empty section name holds keys
// appearing before any [section] header.
struct Config {
  std::map<std::string, Table> sections;

  bool has(const std::string& sec, const std::string& key) const;
  const Value& at(const std::string& sec, const std::string& key) const;

  double get_number(const std::string& sec, const std::string& key) const;
  long get_integer(const std::string& sec, const std::string& key) const;
  bool get_flag(const std::string& sec, const std::string& key) const;
  const std::string& get_string(const std::string& sec,
                                const std::string& key) const;
  const std::vector<double>& get_list(const std::string& sec,
                                      const std::string& key) const;

  // Replaces defaults by values from `file`.  Sections or keys absent from
  // the defaults, or kind mismatches, are rejected: every accepted key is a
  // documented knob.
  void overlay(const Config& file);

  std::string render() const;  // full round-trippable config text
};

Config parse_config_text(const std::string& text);
Config parse_config_file(const std::string& path);

}  // namespace hlabtool
