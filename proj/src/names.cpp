#include "pwfcalc/names.hpp"

#include <algorithm>
#include <limits>

namespace pwfcalc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::invalid_fusion: return "invalid fusion";
    case ErrorKind::construction_rejected: return "construction rejected";
    case ErrorKind::ill_scoped_star: return "ill-scoped star";
    case ErrorKind::rule_mismatch: return "rule mismatch";
    case ErrorKind::unbound_variable: return "unbound variable";
    case ErrorKind::not_representable: return "not representable";
    case ErrorKind::invalid_argument: return "invalid argument";
  }
  return "error";
}

Word::Word(std::initializer_list<int> ls) {
  for (int l : ls) {
    if (l != 1 && l != 2) throw Error(ErrorKind::invalid_argument, "word letters must be 1 or 2");
    letters.push_back(static_cast<std::uint8_t>(l));
  }
}

Word Word::parse(std::string_view text) {
  Cursor c(text);
  Word w = parse_word(c);
  c.expect_end();
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

Word prepend(std::uint8_t letter, const Word& w) {
  Word r;
  r.letters.reserve(w.size() + 1);
  r.letters.push_back(letter);
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  return r;
}

bool ends_with(const Word& w, const Word& suffix) {
  if (suffix.size() > w.size()) return false;
  return std::equal(suffix.letters.begin(), suffix.letters.end(), w.letters.end() - static_cast<long>(suffix.size()));
}

Word drop_suffix(const Word& w, std::size_t n) {
  Word r;
  r.letters.assign(w.letters.begin(), w.letters.end() - static_cast<long>(n));
  return r;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += static_cast<char>('0' + w.letters[i]);
  }
  return s;
}

Name tag(Name n, const Word& w) {
  Name v = n;
  for (auto l : w.letters) v = (l == 1) ? 2 * v + 1 : 2 * v;
  return v;
}

std::optional<Name> checked_tag(Name n, const Word& w) {
  constexpr Name limit = std::numeric_limits<Name>::max() / 2 - 1;
  Name v = n;
  for (auto l : w.letters) {
    if (v > limit) return std::nullopt;
    v = (l == 1) ? 2 * v + 1 : 2 * v;
  }
  return v;
}

std::optional<Name> untag(Name x, const Word& w) {
  Name v = x;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    bool odd = v % 2 == 1;
    if ((*it == 1) != odd) return std::nullopt;
    v = odd ? (v - 1) / 2 : v / 2;
  }
  return v;
}

NameSet NameSet::all() {
  NameSet s;
  s.universal = true;
  return s;
}

NameSet NameSet::residue(const Word& w) {
  NameSet s;
  s.residues.push_back(w);
  return s;
}

NameSet NameSet::of(std::initializer_list<Name> xs) {
  NameSet s;
  s.singletons.insert(xs.begin(), xs.end());
  return s;
}

NameSet NameSet::of(const std::set<Name>& xs) {
  NameSet s;
  s.singletons = xs;
  return s;
}

bool NameSet::member(Name x) const {
  if (universal || singletons.count(x)) return true;
  return std::any_of(residues.begin(), residues.end(), [&](const Word& w) { return untag(x, w).has_value(); });
}

Tri NameSet::member_generic(const Word& v) const {
  if (universal) return Tri::yes;
  bool unknown = false;
  for (const auto& r : residues) {
    if (r.size() <= v.size()) {
      if (ends_with(v, r)) return Tri::yes;
    } else if (ends_with(r, v)) {
      unknown = true;
    }
  }
  return unknown ? Tri::unknown : Tri::no;
}

Name NameSet::max_constant() const { return singletons.empty() ? 0 : *singletons.rbegin(); }

std::size_t NameSet::max_word() const {
  std::size_t m = 0;
  for (const auto& r : residues) m = std::max(m, r.size());
  return m;
}

NameSet NameSet::unite(const NameSet& other) const {
  NameSet r = *this;
  r.universal = universal || other.universal;
  r.singletons.insert(other.singletons.begin(), other.singletons.end());
  for (const auto& w : other.residues)
    if (std::find(r.residues.begin(), r.residues.end(), w) == r.residues.end()) r.residues.push_back(w);
  return r;
}

std::string to_string(const std::set<Name>& names) {
  std::string s = "{";
  bool first = true;
  for (Name x : names) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(x);
  }
  return s + "}";
}

std::string to_string(const NameSet& s) {
  if (s.universal) return "all";
  std::vector<std::string> parts;
  if (!s.singletons.empty() || s.residues.empty()) parts.push_back(to_string(s.singletons));
  auto residues = s.residues;
  std::sort(residues.begin(), residues.end());
  for (const auto& w : residues) parts.push_back("@" + to_string(w));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

Word parse_word(Cursor& c) {
  Word w;
  if (c.accept("ε") || c.accept_keyword("eps")) return w;
  c.skip_ws();
  while (true) {
    char ch = c.peek_raw();
    if (ch != '1' && ch != '2') c.fail("expected a word letter 1 or 2");
    w.letters.push_back(static_cast<std::uint8_t>(ch - '0'));
    c.advance();
    if (c.peek_raw() == '.' ) {
      c.advance();
      continue;
    }
    break;
  }
  return w;
}

Name parse_name(Cursor& c, bool allow_sugar) {
  Name n = c.natural();
  if (!allow_sugar) return n;
  Word w;
  while (c.peek_raw() == '.') {
    std::size_t save = c.pos();
    c.advance();
    char ch = c.peek_raw();
    if (ch != '1' && ch != '2') {
      c.reset(save);
      break;
    }
    c.advance();
    char next = c.peek_raw();
    if (std::isdigit(static_cast<unsigned char>(next))) {
      c.reset(save);
      break;
    }
    w.letters.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return tag(n, w);
}

Name parse_name(std::string_view text) {
  Cursor c(text);
  Name n = parse_name(c);
  c.expect_end();
  return n;
}

static NameSet parse_nameset_atom(Cursor& c) {
  if (c.accept_keyword("all")) return NameSet::all();
  if (c.accept("@")) return NameSet::residue(parse_word(c));
  NameSet s;
  c.expect("{");
  if (c.accept("}")) return s;
  do {
    s.singletons.insert(parse_name(c));
  } while (c.accept(","));
  c.expect("}");
  return s;
}

NameSet parse_nameset(Cursor& c) {
  NameSet s = parse_nameset_atom(c);
  while (c.accept("+")) s = s.unite(parse_nameset_atom(c));
  return s;
}

NameSet parse_nameset(std::string_view text) {
  Cursor c(text);
  NameSet s = parse_nameset(c);
  c.expect_end();
  return s;
}

}  // namespace pwfcalc
