#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwfcalc/names.hpp"

namespace pwfcalc {

using WordRemap = std::pair<Word, Word>;

// A representable substitution: a finite map, then word remaps n.u -> n.v, identity elsewhere.
// Finite entries take precedence over the remaps.
class Substitution {
public:
  Substitution() = default;
  Substitution(std::map<Name, Name> finite, std::vector<WordRemap> remaps);

  static Substitution identity() { return {}; }
  static Substitution single(Name from, Name to);
  static Substitution remap(const Word& from, const Word& to);
  static Substitution remaps(std::vector<WordRemap> rs);

  Name apply(Name x) const;
  Name operator()(Name x) const { return apply(x); }

  const std::map<Name, Name>& finite() const { return finite_; }
  const std::vector<WordRemap>& word_remaps() const { return remaps_; }

  // Word w such that apply(tag(n, r)) = tag(n, w) for every n outside the finite part,
  // or nullopt when the answer depends on the letters of n.
  std::optional<Word> region_image(const Word& r) const;
  // Tri-valued: does tag(N, v) belong to some remap domain, for generic N.
  Tri in_remap_domain_generic(const Word& v) const;
  // All x with apply(x) = y (finite set).
  std::vector<Name> preimages(Name y) const;
  // Generic preimages of tag(N, v); nullopt when undetermined.
  std::optional<std::vector<Word>> preimages_generic(const Word& v) const;

  Name max_constant() const;
  std::size_t max_word() const;
  bool is_pure_remap() const { return finite_.empty(); }

private:
  std::map<Name, Name> finite_;
  std::vector<WordRemap> remaps_;
};

Substitution compose(const Substitution& sigma, const Substitution& tau);  // sigma after tau
Substitution restrict_away(const Substitution& sigma, const NameSet& x);
bool equal(const Substitution& a, const Substitution& b);
// Checks sigma = rho^-1 . tau . rho for a finite permutation rho (given as a map on its support).
bool equivalent_via(const Substitution& sigma, const Substitution& tau, const std::map<Name, Name>& rho);

std::string to_string(const Substitution& s);
Substitution parse_substitution(std::string_view text);
Substitution parse_substitution(Cursor& c);

}  // namespace pwfcalc
