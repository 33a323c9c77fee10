#include "wpent/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace wpent {

namespace {

// Every key the tool understands, as "section.name".  Parsing rejects
// anything else.
const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "run.scenario", "run.seed", "run.tol",
      "cavity1.omega", "cavity1.gamma", "cavity1.g", "cavity1.a0_re",
      "cavity1.a0_im",
      "cavity2.omega", "cavity2.gamma", "cavity2.g", "cavity2.a0_re",
      "cavity2.a0_im",
      "atom.omega_eg", "atom.gamma", "atom.g",
      "ensemble.n", "ensemble.gamma_n", "ensemble.omega_eg", "ensemble.g",
      "ensemble.k0", "ensemble.preset", "ensemble.side",
      "time.t_max_gamma", "time.points",
      "squeeze.r", "squeeze.r2", "squeeze.eps", "squeeze.modes",
      "efield.z_max", "efield.z_points", "efield.t_max", "efield.t_points",
      "sweep.axis", "sweep.start", "sweep.stop", "sweep.points",
      "output.dir",
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

RunConfig RunConfig::from_string(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    if (section.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": key outside any [section]");
    const std::string key = section + "." + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!known_keys().count(key))
      throw ConfigError("unknown configuration key: " + key);
    if (cfg.kv_.count(key))
      throw ConfigError("duplicate configuration key: " + key);
    cfg.kv_[key] = value;
  }
  return cfg;
}

bool RunConfig::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string RunConfig::get_str(const std::string& key,
                               std::optional<std::string> def) const {
  const auto it = kv_.find(key);
  if (it != kv_.end()) return it->second;
  if (def) return *def;
  throw ConfigError("missing required configuration key: " + key);
}

double RunConfig::get_num(const std::string& key,
                          std::optional<double> def) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) {
    if (def) return *def;
    throw ConfigError("missing required configuration key: " + key);
  }
  try {
    size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key " + key + ": not a number: " + it->second);
  }
}

long long RunConfig::get_int(const std::string& key,
                             std::optional<long long> def) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) {
    if (def) return *def;
    throw ConfigError("missing required configuration key: " + key);
  }
  try {
    size_t pos = 0;
    const long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key " + key + ": not an integer: " + it->second);
  }
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (!known_keys().count(key)) throw ConfigError("unknown key: " + key);
  kv_[key] = value;
}

}  // namespace wpent
