#include "pwfcalc/subst.hpp"

#include <algorithm>
#include <set>

namespace pwfcalc {

namespace {

// Value of x under the remaps only (finite entries ignored).
Name remap_value(const std::vector<WordRemap>& rs, Name x) {
  for (const auto& [u, v] : rs)
    if (auto n = untag(x, u)) return tag(*n, v);
  return x;
}

bool overlapping(const Word& a, const Word& b) { return ends_with(a, b) || ends_with(b, a); }

// Merges sibling remaps 1.a -> 1.b and 2.a -> 2.b into a -> b until nothing changes.
std::vector<WordRemap> merge_siblings(std::vector<WordRemap> rs) {
  std::set<WordRemap> s(rs.begin(), rs.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b] : s) {
      if (a.empty() || b.empty() || a.letters[0] != 1 || b.letters[0] != 1) continue;
      Word ra, rb;
      ra.letters.assign(a.letters.begin() + 1, a.letters.end());
      rb.letters.assign(b.letters.begin() + 1, b.letters.end());
      WordRemap sib{prepend(2, ra), prepend(2, rb)};
      if (s.count(sib)) {
        s.erase(WordRemap{a, b});
        s.erase(sib);
        if (ra != rb) s.insert({ra, rb});
        changed = true;
        break;
      }
    }
  }
  return {s.begin(), s.end()};
}

template <class Leaf>
void split_regions(const Word& r, std::size_t depth, std::size_t limit, Leaf&& leaf) {
  if (leaf(r)) return;
  if (depth > limit) throw Error(ErrorKind::not_representable, "substitution region does not stabilise");
  split_regions(prepend(1, r), depth + 1, limit, leaf);
  split_regions(prepend(2, r), depth + 1, limit, leaf);
}

}  // namespace

Substitution::Substitution(std::map<Name, Name> finite, std::vector<WordRemap> remaps) {
  for (auto& rm : remaps) {
    if (rm.first == rm.second) continue;
    for (const auto& other : remaps_)
      if (overlapping(other.first, rm.first))
        throw Error(ErrorKind::invalid_argument,
                    "overlapping remap domains " + to_string(other.first) + " and " + to_string(rm.first));
    remaps_.push_back(rm);
  }
  std::sort(remaps_.begin(), remaps_.end());
  // Identity entries only matter where a remap would otherwise move the name.
  for (auto& [k, v] : finite)
    if (k != v || remap_value(remaps_, k) != k) finite_[k] = v;
}

Substitution Substitution::single(Name from, Name to) { return Substitution({{from, to}}, {}); }
Substitution Substitution::remap(const Word& from, const Word& to) { return Substitution({}, {{from, to}}); }
Substitution Substitution::remaps(std::vector<WordRemap> rs) { return Substitution({}, std::move(rs)); }

Name Substitution::apply(Name x) const {
  if (auto it = finite_.find(x); it != finite_.end()) return it->second;
  for (const auto& [u, v] : remaps_)
    if (auto n = untag(x, u)) return tag(*n, v);
  return x;
}

std::optional<Word> Substitution::region_image(const Word& r) const {
  bool unknown = false;
  for (const auto& [u, v] : remaps_) {
    if (u.size() <= r.size()) {
      if (ends_with(r, u)) return concat(drop_suffix(r, u.size()), v);
    } else if (ends_with(u, r)) {
      unknown = true;
    }
  }
  if (unknown) return std::nullopt;
  return r;
}

Tri Substitution::in_remap_domain_generic(const Word& v) const {
  bool unknown = false;
  for (const auto& [u, w] : remaps_) {
    (void)w;
    if (u.size() <= v.size()) {
      if (ends_with(v, u)) return Tri::yes;
    } else if (ends_with(u, v)) {
      unknown = true;
    }
  }
  return unknown ? Tri::unknown : Tri::no;
}

std::vector<Name> Substitution::preimages(Name y) const {
  std::vector<Name> out;
  for (const auto& [k, v] : finite_)
    if (v == y) out.push_back(k);
  for (const auto& [u, v] : remaps_) {
    if (auto n = untag(y, v)) {
      Name x = tag(*n, u);
      if (!finite_.count(x)) out.push_back(x);
    }
  }
  if (!finite_.count(y)) {
    bool in_domain = std::any_of(remaps_.begin(), remaps_.end(), [&](const WordRemap& rm) { return untag(y, rm.first).has_value(); });
    if (!in_domain) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<Word>> Substitution::preimages_generic(const Word& v) const {
  std::vector<Word> out;
  for (const auto& [u, w] : remaps_) {
    if (w.size() <= v.size()) {
      if (ends_with(v, w)) out.push_back(concat(drop_suffix(v, w.size()), u));
    } else if (ends_with(w, v)) {
      return std::nullopt;
    }
  }
  switch (in_remap_domain_generic(v)) {
    case Tri::unknown: return std::nullopt;
    case Tri::no: out.push_back(v); break;
    case Tri::yes: break;
  }
  return out;
}

Name Substitution::max_constant() const {
  Name m = 0;
  for (const auto& [k, v] : finite_) m = std::max({m, k, v});
  return m;
}

std::size_t Substitution::max_word() const {
  std::size_t m = 0;
  for (const auto& [u, v] : remaps_) m = std::max({m, u.size(), v.size()});
  return m;
}

namespace {

Substitution assemble(std::map<Name, Name> finite, std::vector<WordRemap> leaves) {
  auto remaps = merge_siblings(std::move(leaves));
  std::map<Name, Name> kept;
  for (auto& [k, v] : finite)
    if (remap_value(remaps, k) != v) kept[k] = v;
  return Substitution(std::move(kept), std::move(remaps));
}

}  // namespace

Substitution compose(const Substitution& sigma, const Substitution& tau) {
  std::vector<WordRemap> leaves;
  std::size_t limit = sigma.max_word() + tau.max_word() + 2;
  split_regions(Word{}, 0, limit, [&](const Word& r) {
    auto t = tau.region_image(r);
    if (!t) return false;
    auto w = sigma.region_image(*t);
    if (!w) return false;
    if (*w != r) leaves.push_back({r, *w});
    return true;
  });
  std::map<Name, Name> finite;
  for (const auto& [k, v] : tau.finite()) finite[k] = sigma.apply(v);
  for (const auto& [k, v] : sigma.finite()) {
    (void)v;
    for (Name x : tau.preimages(k))
      if (!tau.finite().count(x)) finite[x] = sigma.apply(tau.apply(x));
  }
  return assemble(std::move(finite), std::move(leaves));
}

Substitution restrict_away(const Substitution& sigma, const NameSet& x) {
  if (x.universal) return Substitution::identity();
  std::vector<WordRemap> leaves;
  std::size_t limit = sigma.max_word() + x.max_word() + 2;
  split_regions(Word{}, 0, limit, [&](const Word& r) {
    // Residue membership below is exact for every n: singletons are handled as finite entries.
    NameSet residues_only;
    residues_only.residues = x.residues;
    Tri m = residues_only.member_generic(r);
    if (m == Tri::unknown) return false;
    if (m == Tri::yes) return true;
    auto w = sigma.region_image(r);
    if (!w) return false;
    if (*w != r) leaves.push_back({r, *w});
    return true;
  });
  std::map<Name, Name> finite;
  for (const auto& [k, v] : sigma.finite())
    if (!x.member(k)) finite[k] = v;
  for (Name s : x.singletons) finite[s] = s;
  return assemble(std::move(finite), std::move(leaves));
}

bool equal(const Substitution& a, const Substitution& b) {
  for (const auto& [k, v] : a.finite())
    if (b.apply(k) != v) return false;
  for (const auto& [k, v] : b.finite())
    if (a.apply(k) != v) return false;
  bool same = true;
  std::size_t limit = a.max_word() + b.max_word() + 2;
  split_regions(Word{}, 0, limit, [&](const Word& r) {
    auto wa = a.region_image(r);
    auto wb = b.region_image(r);
    if (!wa || !wb) return false;
    if (*wa != *wb) same = false;
    return true;
  });
  return same;
}

bool equivalent_via(const Substitution& sigma, const Substitution& tau, const std::map<Name, Name>& rho) {
  std::map<Name, Name> inv;
  for (const auto& [k, v] : rho) {
    if (!rho.count(v) || inv.count(v))
      throw Error(ErrorKind::invalid_argument, "rho is not a bijection on its support");
    inv[v] = k;
  }
  Substitution r(rho, {});
  Substitution ri(inv, {});
  return equal(sigma, compose(ri, compose(tau, r)));
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : s.finite()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(k) + ":=" + std::to_string(v);
  }
  if (!s.word_remaps().empty()) {
    out += first ? "; " : " ; ";
    bool f2 = true;
    for (const auto& [u, v] : s.word_remaps()) {
      if (!f2) out += ", ";
      f2 = false;
      out += to_string(u) + " -> " + to_string(v);
    }
  }
  return out + "}";
}

Substitution parse_substitution(Cursor& c) {
  c.expect("{");
  std::map<Name, Name> finite;
  std::vector<WordRemap> remaps;
  if (!c.starts_with(";") && !c.starts_with("}")) {
    do {
      Name k = parse_name(c);
      c.expect(":=");
      Name v = parse_name(c);
      if (finite.count(k)) c.fail("duplicate key in substitution");
      finite[k] = v;
    } while (c.accept(","));
  }
  if (c.accept(";")) {
    if (!c.starts_with("}")) {
      do {
        Word u = parse_word(c);
        c.expect("->");
        Word v = parse_word(c);
        remaps.push_back({u, v});
      } while (c.accept(","));
    }
  }
  c.expect("}");
  try {
    return Substitution(std::move(finite), std::move(remaps));
  } catch (const Error& e) {
    c.fail(e.what());
  }
}

Substitution parse_substitution(std::string_view text) {
  Cursor c(text);
  auto s = parse_substitution(c);
  c.expect_end();
  return s;
}

}  // namespace pwfcalc
