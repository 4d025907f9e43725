#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "pwfcalc/reduction.hpp"
#include "pwfcalc/report.hpp"

namespace pwfcalc {

// Subset of a universe, indexed like its members.
using Bits = std::vector<bool>;

struct UniverseSpec {
  std::size_t actions = 3;
  Name names = 4;
  std::size_t arity = 0;
  std::vector<Fusion> fusions{Fusion{}};
};
// "actions=2;names=3;arity=0;fusions={},{0~1}"; missing keys keep their defaults.
UniverseSpec parse_universe_spec(std::string_view text);
std::string to_string(const UniverseSpec& s);

// Every process with at most s.actions prefixes over names below s.names, up to congruence,
// paired with each fusion of the list; invalid pairs are dropped and duplicates merged.
std::vector<Pwf> enumerate_universe(const UniverseSpec& s);

// "always" or "done:k".
Pole parse_pole(std::string_view text);

// Orthogonality relative to a finite set of members. Sets produced here are subsets of the
// members; sets given as element lists may contain arbitrary PWF.
class Universe {
public:
  Universe(std::vector<Pwf> members, Pole pole);

  std::size_t size() const { return members_.size(); }
  const std::vector<Pwf>& members() const { return members_; }
  const Pole& pole() const { return pole_; }
  Bits none() const { return Bits(size(), false); }
  Bits everything() const { return Bits(size(), true); }
  Bits of(const std::vector<std::size_t>& idx) const;
  std::vector<Pwf> elements(const Bits& a) const;

  bool orthogonal(const Pwf& p, const Pwf& q) const;
  bool orthogonal_members(std::size_t i, std::size_t j) const { return matrix_[i][j]; }

  Bits perp(const Bits& a) const;
  Bits perp(const std::vector<Pwf>& xs) const;
  Bits biperp(const Bits& a) const { return perp(perp(a)); }
  Bits biperp(const std::vector<Pwf>& xs) const { return perp(perp(xs)); }
  bool is_behaviour(const Bits& a) const { return biperp(a) == a; }
  // p belongs to the orthogonal of a, for any PWF p.
  bool in_perp(const Pwf& p, const Bits& a) const;

  // Truth-value operations; element-wise images are closed under perp twice where required.
  std::vector<Pwf> par_image(const Bits& a, const Bits& b) const;
  std::vector<Pwf> bullet_image(const Bits& a, const Bits& b) const;
  Bits parallel(const Bits& a, const Bits& b) const;
  Bits star(int i, const Bits& a, const Bits& b) const;
  Bits tensor(const Bits& a, const Bits& b) const;
  Bits parr(const Bits& a, const Bits& b) const;
  Bits lolli(const Bits& a, const Bits& b) const;
  Bits one() const;
  Bits join(const std::vector<Bits>& family) const;

private:
  bool pole_holds(const Pwf& closed) const;

  std::vector<Pwf> members_;
  Pole pole_;
  std::vector<std::vector<bool>> matrix_;
  mutable std::map<std::string, bool> cache_;
  mutable std::mutex cache_mutex_;
};

Bits set_union(const Bits& a, const Bits& b);
Bits set_intersection(const Bits& a, const Bits& b);
bool subset(const Bits& a, const Bits& b);
std::size_t count(const Bits& a);

struct LawOptions {
  std::uint32_t seed = 7;
  std::size_t samples = 24;
};

// Galois laws, union/intersection laws, tensor over join, parallel/join inclusion and the
// star/lolli adjunction, each over sampled subsets and families.
Report check_laws(const Universe& u, const LawOptions& opts = {});

}  // namespace pwfcalc
