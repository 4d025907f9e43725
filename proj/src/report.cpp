#include "pwfcalc/report.hpp"

#include <algorithm>

namespace pwfcalc {

void Report::add(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out = "# " + title + "\n";
  for (const auto& n : notes) out += "# " + n + "\n";
  for (const auto& c : checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.witness.empty()) out += "  [" + c.witness + "]";
    out += "\n";
  }
  return out;
}

std::string Report::to_tsv() const {
  std::string out;
  for (const auto& n : notes) out += "#\t" + n + "\n";
  for (const auto& c : checks) out += c.name + "\t" + (c.pass ? "pass" : "fail") + "\t" + c.witness + "\n";
  return out;
}

}  // namespace pwfcalc
