#pragma once

#include <string>
#include <string_view>

#include "pwfcalc/pwf.hpp"

namespace pwfcalc {

struct Config {
  std::size_t class_budget = 1024;
  Name sample_bound = 256;
  NuClosure nu_closure = NuClosure::literal;
  NuSeed nu_seed = NuSeed::fn;
  std::size_t step_bound = 8;
};

// key = value lines; '#' starts a comment. Throws invalid_argument on unknown keys or bad values.
Config parse_config(std::string_view text);
Config load_config(const std::string& path);
// Sets one key from its textual value, with the same validation as the file form.
void set_config_value(Config& c, const std::string& key, const std::string& value);

// Installs class_budget, sample_bound and the nu options as the process-wide defaults.
void apply(const Config& c);

std::string to_string(NuClosure c);
std::string to_string(NuSeed s);
std::string to_string(const Config& c);

}  // namespace pwfcalc
