#pragma once

#include <string>
#include <vector>

namespace pwfcalc {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

// Outcome of a law suite; notes carry the parameters the verdicts depend on.
struct Report {
  std::string title;
  std::vector<std::string> notes;
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::string witness = {});
  bool ok() const;
  const Check* find(const std::string& name) const;
  std::string to_text() const;
  std::string to_tsv() const;
};

}  // namespace pwfcalc
