#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pwfcalc/text.hpp"

namespace pwfcalc {

using Name = std::uint64_t;

// A tag word over {1,2}; letters are applied left to right, so n.1.2 = 2(2n+1).
struct Word {
  std::vector<std::uint8_t> letters;

  Word() = default;
  Word(std::initializer_list<int> ls);
  static Word parse(std::string_view text);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;
};

Word concat(const Word& a, const Word& b);
Word prepend(std::uint8_t letter, const Word& w);
bool ends_with(const Word& w, const Word& suffix);
Word drop_suffix(const Word& w, std::size_t n);
std::string to_string(const Word& w);

Name tag(Name n, const Word& w);
std::optional<Name> untag(Name x, const Word& w);
// tag with overflow detection; nullopt when the result does not fit in a Name.
std::optional<Name> checked_tag(Name n, const Word& w);

// Three-valued answer used by the generic-name reasoning in fusion and subst.
enum class Tri { no, yes, unknown };

struct NameSet {
  std::set<Name> singletons;
  std::vector<Word> residues;
  bool universal = false;

  static NameSet all();
  static NameSet residue(const Word& w);
  static NameSet of(std::initializer_list<Name> xs);
  static NameSet of(const std::set<Name>& xs);

  bool member(Name x) const;
  bool empty() const { return !universal && singletons.empty() && residues.empty(); }
  // Membership of tag(N, v) for every N beyond max_constant(): decided by the word alone or unknown.
  Tri member_generic(const Word& v) const;
  Name max_constant() const;
  std::size_t max_word() const;

  NameSet unite(const NameSet& other) const;
};

std::string to_string(const NameSet& s);

Word parse_word(Cursor& c);
// Parses a decimal name with optional dotted tag sugar, e.g. "1.1.2" = tag(1, "1.2").
Name parse_name(Cursor& c, bool allow_sugar = true);
Name parse_name(std::string_view text);
NameSet parse_nameset(Cursor& c);
NameSet parse_nameset(std::string_view text);

std::string to_string(const std::set<Name>& names);

}  // namespace pwfcalc
