#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pwfcalc/names.hpp"
#include "pwfcalc/subst.hpp"

namespace pwfcalc {

// Affine generator {(tag(n, a), tag(n, b)) | n not in excluded}.
struct Family {
  Word a;
  Word b;
  std::set<Name> excluded;

  auto operator<=>(const Family&) const = default;
  bool operator==(const Family&) const = default;
};

// An equivalence relation on names with finite classes, given by generators; Delta has none.
class Fusion {
public:
  Fusion() = default;

  void add_pair(Name x, Name y);
  void add_family(Family f);
  void add_family(const Word& a, const Word& b) { add_family(Family{a, b, {}}); }

  const std::set<std::pair<Name, Name>>& pairs() const { return pairs_; }
  const std::vector<Family>& families() const { return families_; }
  bool is_delta() const { return pairs_.empty() && families_.empty(); }

  // Direct generator neighbours of x.
  std::vector<Name> neighbors(Name x) const;
  Name max_constant() const;
  std::size_t max_word() const;

private:
  std::set<std::pair<Name, Name>> pairs_;
  std::vector<Family> families_;  // sorted, oriented a < b
};

struct FusionLimits {
  std::size_t class_budget = 1024;
  Name sample_bound = 256;
};
FusionLimits& fusion_limits();

bool validate(const Fusion& e, std::size_t budget);
bool validate(const Fusion& e);
std::set<Name> class_of(const Fusion& e, Name x);
bool related(const Fusion& e, Name x, Name y);
// Class of tag(N, v) as words relative to a generic large N; nullopt when it depends on N.
std::optional<std::set<Word>> generic_class(const Fusion& e, const Word& v);

Fusion join(const Fusion& e, const Fusion& f);
Fusion meet(const Fusion& e, const Fusion& f);
Fusion restrict(const Fusion& e, const NameSet& x);
Fusion remove(const Fusion& e, const NameSet& x);
Fusion map_fusion(const Fusion& e, const Substitution& sigma);
Fusion relabel(const Fusion& e, const Word& w);
Fusion unrelabel(const Fusion& e, const Word& w);

Name min_rep(const Fusion& e, Name x);
Name second_rep(const Fusion& e, Name x);
// sigma_e on a finite domain; names outside the domain are left alone.
Substitution canonical_subst(const Fusion& e, const std::set<Name>& domain);
bool in_support(const Fusion& e, Name x);

bool equal(const Fusion& e, const Fusion& f);
// Every generator of e holds in f; nullopt only when a family could not be decided symbolically.
std::optional<bool> subsumed_exact(const Fusion& e, const Fusion& f);

Fusion delta();
Fusion identity_I();
Fusion psi();
Fusion phi();
Fusion sigma_tau(const Substitution& tau);

std::string to_string(const Fusion& e);
Fusion parse_fusion(Cursor& c);
Fusion parse_fusion(std::string_view text);

}  // namespace pwfcalc
