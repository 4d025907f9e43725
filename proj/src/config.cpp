#include "pwfcalc/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pwfcalc {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t positive(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size() || v == 0)
    throw Error(ErrorKind::invalid_argument, key + " must be a positive integer, got '" + value + "'");
  return v;
}

}  // namespace

void set_config_value(Config& c, const std::string& key, const std::string& value) {
  if (key == "class_budget") {
    c.class_budget = positive(key, value);
  } else if (key == "sample_bound") {
    c.sample_bound = positive(key, value);
  } else if (key == "step_bound") {
    c.step_bound = positive(key, value);
  } else if (key == "nu_closure") {
    if (value == "literal") c.nu_closure = NuClosure::literal;
    else if (value == "class-closure") c.nu_closure = NuClosure::class_closure;
    else throw Error(ErrorKind::invalid_argument, "nu_closure must be literal or class-closure, got '" + value + "'");
  } else if (key == "nu_seed") {
    if (value == "fn") c.nu_seed = NuSeed::fn;
    else if (value == "np") c.nu_seed = NuSeed::np;
    else throw Error(ErrorKind::invalid_argument, "nu_seed must be fn or np, got '" + value + "'");
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown config key '" + key + "'");
  }
}

Config parse_config(std::string_view text) {
  Config c;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::invalid_argument, "config line " + std::to_string(lineno) + ": expected key = value");
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    set_config_value(c, trim(line.substr(0, eq)), value);
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot read config file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str());
}

void apply(const Config& c) {
  fusion_limits().class_budget = c.class_budget;
  fusion_limits().sample_bound = c.sample_bound;
  pwf_options().nu_closure = c.nu_closure;
  pwf_options().nu_seed = c.nu_seed;
}

std::string to_string(NuClosure c) { return c == NuClosure::literal ? "literal" : "class-closure"; }
std::string to_string(NuSeed s) { return s == NuSeed::fn ? "fn" : "np"; }

std::string to_string(const Config& c) {
  return "class_budget=" + std::to_string(c.class_budget) + " sample_bound=" + std::to_string(c.sample_bound) +
         " nu_closure=" + to_string(c.nu_closure) + " nu_seed=" + to_string(c.nu_seed) +
         " step_bound=" + std::to_string(c.step_bound);
}

}  // namespace pwfcalc
