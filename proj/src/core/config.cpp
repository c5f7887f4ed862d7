#include "mlab/core/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("Config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

Config Config::from_string(const std::string& text) {
  Config cfg;
  std::stringstream ss(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    std::size_t hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::runtime_error("Config: bad section at line " +
                                 std::to_string(line_no));
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("Config: missing '=' at line " +
                               std::to_string(line_no));
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error("Config: empty key at line " +
                               std::to_string(line_no));
    }
    if (!section.empty()) key = section + "." + key;
    cfg.kv_[key] = value;
  }
  return cfg;
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::get_str(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw std::runtime_error("Config: missing key " + key);
  return it->second;
}

std::string Config::get_str(const std::string& key,
                            const std::string& dflt) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? dflt : it->second;
}

double Config::get_double(const std::string& key) const {
  const std::string s = get_str(key);
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("Config: key " + key + " is not a number: " + s);
  }
}

double Config::get_double(const std::string& key, double dflt) const {
  return has(key) ? get_double(key) : dflt;
}

std::int64_t Config::get_int(const std::string& key) const {
  const std::string s = get_str(key);
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("Config: key " + key + " is not an integer: " + s);
  }
}

std::int64_t Config::get_int(const std::string& key, std::int64_t dflt) const {
  return has(key) ? get_int(key) : dflt;
}

bool Config::get_bool(const std::string& key, bool dflt) const {
  if (!has(key)) return dflt;
  std::string s = get_str(key);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw std::runtime_error("Config: key " + key + " is not a boolean: " + s);
}

std::vector<std::string> Config::get_list(const std::string& key) const {
  return split_list(get_str(key));
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& s : get_list(key)) out.push_back(std::stod(s));
  return out;
}

void Config::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

std::vector<std::string> Config::sweep_keys() const {
  if (!has("sweep")) return {};
  return get_list("sweep");
}

std::vector<Config> Config::expand_sweep() const {
  std::vector<Config> cells{*this};
  for (const std::string& key : sweep_keys()) {
    if (!has(key)) throw std::runtime_error("Config: sweep key missing: " + key);
    std::vector<std::string> values = get_list(key);
    if (values.empty()) throw std::runtime_error("Config: empty sweep: " + key);
    std::vector<Config> next;
    next.reserve(cells.size() * values.size());
    for (const Config& cell : cells) {
      for (const std::string& v : values) {
        Config c = cell;
        c.set(key, v);
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

std::uint64_t Config::hash() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [k, v] : kv_) {
    mix(k);
    mix("=");
    mix(v);
    mix("\n");
  }
  return h;
}

std::string Config::hash_hex() const {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash()));
  return buf;
}

}  // namespace mlab
