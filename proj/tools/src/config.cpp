#include "config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hlabtool {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Comment starts at '#' outside quotes.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool parse_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Value parse_value(const std::string& raw, const std::string& where) {
  std::string s = trim(raw);
  if (s.empty()) throw ConfigError(where + ": missing value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"')
      throw ConfigError(where + ": unterminated string");
    return Value::string(s.substr(1, s.size() - 2));
  }
  if (s == "true") return Value::boolean(true);
  if (s == "false") return Value::boolean(false);
  if (s.front() == '[') {
    if (s.back() != ']') throw ConfigError(where + ": unterminated list");
    std::vector<double> xs;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) throw ConfigError(where + ": empty list entry");
      double x;
      if (!parse_number(item, x))
        throw ConfigError(where + ": list entries must be numbers");
      xs.push_back(x);
    }
    return Value::numbers(std::move(xs));
  }
  double x;
  if (parse_number(s, x)) return Value::number(x);
  if (valid_name(s)) return Value::string(s);  // bare word
  throw ConfigError(where + ": cannot parse value '" + s + "'");
}

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Number: return "number";
    case Value::Kind::Boolean: return "boolean";
    case Value::Kind::String: return "string";
    default: return "list";
  }
}

}  // namespace

Value Value::number(double x) {
  Value v;
  v.kind = Kind::Number;
  v.num = x;
  return v;
}

Value Value::boolean(bool b) {
  Value v;
  v.kind = Kind::Boolean;
  v.flag = b;
  return v;
}

Value Value::string(std::string s) {
  Value v;
  v.kind = Kind::String;
  v.str = std::move(s);
  return v;
}

Value Value::numbers(std::vector<double> xs) {
  Value v;
  v.kind = Kind::List;
  v.list = std::move(xs);
  return v;
}

std::string Value::render() const {
  switch (kind) {
    case Kind::Number:
      return format_number(num);
    case Kind::Boolean:
      return flag ? "true" : "false";
    case Kind::String:
      return "\"" + str + "\"";
    default: {
      std::string out = "[";
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ", ";
        out += format_number(list[i]);
      }
      return out + "]";
    }
  }
}

bool Config::has(const std::string& sec, const std::string& key) const {
  auto it = sections.find(sec);
  return it != sections.end() && it->second.count(key) > 0;
}

const Value& Config::at(const std::string& sec, const std::string& key) const {
  auto it = sections.find(sec);
  if (it == sections.end() || it->second.count(key) == 0)
    throw ConfigError("missing config key [" + sec + "] " + key);
  return it->second.at(key);
}

double Config::get_number(const std::string& sec,
                          const std::string& key) const {
  const Value& v = at(sec, key);
  if (v.kind != Value::Kind::Number)
    throw ConfigError("[" + sec + "] " + key + " must be a number");
  return v.num;
}

long Config::get_integer(const std::string& sec,
                         const std::string& key) const {
  double x = get_number(sec, key);
  long n = static_cast<long>(x);
  if (static_cast<double>(n) != x)
    throw ConfigError("[" + sec + "] " + key + " must be an integer");
  return n;
}

bool Config::get_flag(const std::string& sec, const std::string& key) const {
  const Value& v = at(sec, key);
  if (v.kind != Value::Kind::Boolean)
    throw ConfigError("[" + sec + "] " + key + " must be true or false");
  return v.flag;
}

const std::string& Config::get_string(const std::string& sec,
                                      const std::string& key) const {
  const Value& v = at(sec, key);
  if (v.kind != Value::Kind::String)
    throw ConfigError("[" + sec + "] " + key + " must be a string");
  return v.str;
}

const std::vector<double>& Config::get_list(const std::string& sec,
                                            const std::string& key) const {
  const Value& v = at(sec, key);
  if (v.kind != Value::Kind::List)
    throw ConfigError("[" + sec + "] " + key + " must be a list");
  return v.list;
}

void Config::overlay(const Config& file) {
  for (const auto& [sec, table] : file.sections) {
    auto here = sections.find(sec);
    if (here == sections.end())
      throw ConfigError("unknown config section [" + sec + "]");
    for (const auto& [key, value] : table) {
      auto slot = here->second.find(key);
      if (slot == here->second.end())
        throw ConfigError("unknown config key [" + sec + "] " + key);
      if (slot->second.kind != value.kind)
        throw ConfigError("[" + sec + "] " + key + " must be a " +
                          kind_name(slot->second.kind));
      slot->second = value;
    }
  }
}

std::string Config::render() const {
  std::string out;
  auto root = sections.find("");
  if (root != sections.end())
    for (const auto& [key, value] : root->second)
      out += key + " = " + value.render() + "\n";
  for (const auto& [sec, table] : sections) {
    if (sec.empty()) continue;
    if (!out.empty()) out += "\n";
    out += "[" + sec + "]\n";
    for (const auto& [key, value] : table)
      out += key + " = " + value.render() + "\n";
  }
  return out;
}

Config parse_config_text(const std::string& text) {
  Config cfg;
  std::string section;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::string where = "line " + std::to_string(lineno);
    std::string s = trim(strip_comment(line));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(where + ": bad section header");
      section = trim(s.substr(1, s.size() - 2));
      if (!valid_name(section))
        throw ConfigError(where + ": bad section name");
      cfg.sections[section];  // empty sections are allowed
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected key = value");
    std::string key = trim(s.substr(0, eq));
    if (!valid_name(key)) throw ConfigError(where + ": bad key name");
    if (cfg.sections[section].count(key))
      throw ConfigError(where + ": duplicate key " + key);
    cfg.sections[section][key] = parse_value(s.substr(eq + 1), where);
  }
  return cfg;
}

Config parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace hlabtool
