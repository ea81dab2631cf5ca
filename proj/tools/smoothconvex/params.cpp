#include "smoothconvex/params.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "smoothcvx/core/errors.hpp"

namespace smoothconvex {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

double to_real(const std::string& key, const std::string& v) {
  double x = 0.0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end) throw smoothcvx::ConfigError("parameter " + key + ": not a number: '" + v + "'");
  return x;
}

std::int64_t to_integer(const std::string& key, const std::string& v) {
  std::int64_t x = 0;
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end) throw smoothcvx::ConfigError("parameter " + key + ": not an integer: '" + v + "'");
  return x;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw smoothcvx::ConfigError("cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw smoothcvx::ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw smoothcvx::ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

Params::Params(const std::vector<ParamSpec>& specs, const std::map<std::string, std::string>& overrides) {
  for (const auto& s : specs) values_[s.name] = s.default_value;
  for (const auto& [k, v] : overrides) {
    if (!values_.count(k)) {
      std::string valid;
      for (const auto& s : specs) valid += (valid.empty() ? "" : ", ") + s.name;
      throw smoothcvx::ConfigError("unknown key '" + k + "'; valid keys: " + (valid.empty() ? "(none)" : valid));
    }
    values_[k] = v;
  }
}

const std::string& Params::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw smoothcvx::ConfigError("parameter " + key + " is not declared");
  return it->second;
}

double Params::real(const std::string& key) const { return to_real(key, raw(key)); }
std::int64_t Params::integer(const std::string& key) const { return to_integer(key, raw(key)); }
const std::string& Params::text(const std::string& key) const { return raw(key); }

std::vector<double> Params::reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split(raw(key), ',')) out.push_back(to_real(key, item));
  if (out.empty()) throw smoothcvx::ConfigError("parameter " + key + " is empty");
  return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split(text, ',')) {
    const auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      const auto v = to_integer("seed", item);
      if (v < 0) throw smoothcvx::ConfigError("seeds must be non-negative");
      out.push_back(static_cast<std::uint64_t>(v));
      continue;
    }
    const auto lo = to_integer("seed", trim(item.substr(0, dash)));
    const auto hi = to_integer("seed", trim(item.substr(dash + 1)));
    if (lo < 0 || hi < lo) throw smoothcvx::ConfigError("bad seed range '" + item + "'");
    for (auto s = lo; s <= hi; ++s) out.push_back(static_cast<std::uint64_t>(s));
  }
  if (out.empty()) throw smoothcvx::ConfigError("no seeds given");
  return out;
}

}  // namespace smoothconvex
