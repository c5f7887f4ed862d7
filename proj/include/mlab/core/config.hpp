#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mlab {

// Hierarchical key-value configuration.
//
//   [flow.lmf]
//   alpha = 1.5
//   n_orders = 10        # comment
//   seeds = 1,2,3,4      # lists fan out into sweep cells
//
// Section headers prefix keys ("flow.lmf.alpha"). One file describes one
// experiment; list-valued keys named in `sweep` define the sweep grid.
class Config {
 public:
  Config() = default;

  static Config from_file(const std::string& path);
  static Config from_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string get_str(const std::string& key) const;
  std::string get_str(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double dflt) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;

  std::vector<std::string> get_list(const std::string& key) const;
  std::vector<double> get_double_list(const std::string& key) const;

  void set(const std::string& key, const std::string& value);

  const std::map<std::string, std::string>& entries() const { return kv_; }

  // Keys listed in the `sweep` entry (space/comma separated).
  std::vector<std::string> sweep_keys() const;

  // Cartesian product over the sweep keys' list values; each cell is a full
  // config with those keys replaced by a single value.
  std::vector<Config> expand_sweep() const;

  // FNV-1a over the sorted canonical "key=value" text.
  std::uint64_t hash() const;
  std::string hash_hex() const;

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace mlab
