#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pwfcalc/pwf.hpp"

namespace pwfcalc {

// All one-step reducts, deduplicated up to equal_pwf and sorted by canonical print.
std::vector<Pwf> step(const Pwf& p);
bool reduces_within(const Pwf& p, const Pwf& target, std::size_t k);

// A predicate on closed PWF; constant poles let orthogonality checks skip evaluation.
struct Pole {
  std::string name;
  std::function<bool(const Pwf&)> test;
  bool constant = false;

  bool operator()(const Pwf& p) const { return constant || test(p); }
};
Pole pole_always();
// Closed PWF reaching (1, Delta) within k steps.
Pole pole_done(std::size_t k);
Pole pole_exactly_unit();

// For every member p and every reduct q of p: {q}^perp is contained in {p}^perp,
// orthogonality taken against the members.
bool pole_regular_on(const Pole& pole, const std::vector<Pwf>& universe);

}  // namespace pwfcalc
