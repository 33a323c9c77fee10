#pragma once
// Flat INI-style run configuration: [section] headers, key = value lines,
// '#' comments.  Unknown sections/keys are hard errors so physics-parameter
// typos cannot pass silently.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace wpent {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class RunConfig {
 public:
  static RunConfig from_file(const std::string& path);
  static RunConfig from_string(const std::string& text);

  bool has(const std::string& key) const;  // key = "section.name"
  std::string get_str(const std::string& key,
                      std::optional<std::string> def = {}) const;
  double get_num(const std::string& key, std::optional<double> def = {}) const;
  long long get_int(const std::string& key,
                    std::optional<long long> def = {}) const;

  // Command-line / environment overrides.
  void set(const std::string& key, const std::string& value);

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace wpent
