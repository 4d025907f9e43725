#include "pwfcalc/fusion.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <memory>

namespace pwfcalc {

namespace {

constexpr std::size_t kRefineSlack = 12;

Name tag_or_throw(Name n, const Word& w) {
  auto r = checked_tag(n, w);
  if (!r) throw Error(ErrorKind::invalid_fusion, "class leaves the representable name range");
  return *r;
}

std::set<Name> bfs_class(const Fusion& e, Name x, std::size_t budget) {
  std::set<Name> seen{x};
  std::deque<Name> todo{x};
  while (!todo.empty()) {
    Name y = todo.front();
    todo.pop_front();
    for (Name z : e.neighbors(y)) {
      if (seen.insert(z).second) {
        if (seen.size() > budget)
          throw Error(ErrorKind::invalid_fusion, "class of " + std::to_string(x) + " exceeds the budget");
        todo.push_back(z);
      }
    }
  }
  return seen;
}

// Semantic view of a fusion-valued expression: exact classes for concrete names and for
// tag(N, v) with N >= bound, where the answer may depend on the letters of N.
struct Sem {
  virtual ~Sem() = default;
  virtual std::set<Name> concrete(Name x) const = 0;
  virtual std::optional<std::set<Word>> generic(const Word& v) const = 0;
  Name bound = 1;
  std::size_t width = 0;
};

struct GenSem : Sem {
  const Fusion& e;
  explicit GenSem(const Fusion& f) : e(f) {
    bound = f.max_constant() + 1;
    width = f.max_word();
  }
  std::set<Name> concrete(Name x) const override { return class_of(e, x); }
  std::optional<std::set<Word>> generic(const Word& v) const override { return generic_class(e, v); }
};

struct FilterSem : Sem {
  const Sem& base;
  const NameSet& set;
  bool negated;
  FilterSem(const Sem& b, const NameSet& s, bool neg) : base(b), set(s), negated(neg) {
    bound = std::max(b.bound, s.max_constant() + 1);
    width = std::max(b.width, s.max_word());
  }
  bool member(Name x) const { return set.member(x) != negated; }
  Tri member_generic(const Word& v) const {
    Tri t = set.member_generic(v);
    if (!negated || t == Tri::unknown) return t;
    return t == Tri::yes ? Tri::no : Tri::yes;
  }
  std::set<Name> concrete(Name x) const override {
    if (!member(x)) return {x};
    std::set<Name> out;
    for (Name y : base.concrete(x))
      if (member(y)) out.insert(y);
    return out;
  }
  std::optional<std::set<Word>> generic(const Word& v) const override {
    Tri m = member_generic(v);
    if (m == Tri::unknown) return std::nullopt;
    if (m == Tri::no) return std::set<Word>{v};
    auto c = base.generic(v);
    if (!c) return std::nullopt;
    std::set<Word> out;
    for (const auto& w : *c) {
      Tri t = member_generic(w);
      if (t == Tri::unknown) return std::nullopt;
      if (t == Tri::yes) out.insert(w);
    }
    return out;
  }
};

struct MeetSem : Sem {
  const Sem& l;
  const Sem& r;
  MeetSem(const Sem& a, const Sem& b) : l(a), r(b) {
    bound = std::max(a.bound, b.bound);
    width = std::max(a.width, b.width);
  }
  std::set<Name> concrete(Name x) const override {
    auto a = l.concrete(x);
    auto b = r.concrete(x);
    std::set<Name> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
  }
  std::optional<std::set<Word>> generic(const Word& v) const override {
    auto a = l.generic(v);
    if (!a) return std::nullopt;
    auto b = r.generic(v);
    if (!b) return std::nullopt;
    std::set<Word> out;
    std::set_intersection(a->begin(), a->end(), b->begin(), b->end(), std::inserter(out, out.end()));
    return out;
  }
};

struct MapSem : Sem {
  const Sem& base;
  const Substitution& sigma;
  MapSem(const Sem& b, const Substitution& s) : base(b), sigma(s) {
    bound = std::max(b.bound, s.max_constant() + 1);
    width = b.width + s.max_word();
  }
  std::set<Name> concrete(Name y) const override {
    std::set<Name> seen{y};
    std::deque<Name> todo{y};
    while (!todo.empty()) {
      Name z = todo.front();
      todo.pop_front();
      for (Name x : sigma.preimages(z))
        for (Name w : base.concrete(x)) {
          Name img = sigma(w);
          if (seen.insert(img).second) {
            if (seen.size() > fusion_limits().class_budget)
              throw Error(ErrorKind::invalid_fusion, "mapped class exceeds the budget");
            todo.push_back(img);
          }
        }
    }
    return seen;
  }
  std::optional<std::set<Word>> generic(const Word& v) const override {
    std::set<Word> seen{v};
    std::deque<Word> todo{v};
    while (!todo.empty()) {
      Word z = todo.front();
      todo.pop_front();
      auto pre = sigma.preimages_generic(z);
      if (!pre) return std::nullopt;
      for (const auto& x : *pre) {
        auto c = base.generic(x);
        if (!c) return std::nullopt;
        for (const auto& w : *c) {
          auto img = sigma.region_image(w);
          if (!img) return std::nullopt;
          if (seen.insert(*img).second) {
            if (seen.size() > fusion_limits().class_budget)
              throw Error(ErrorKind::invalid_fusion, "mapped class exceeds the budget");
            todo.push_back(*img);
          }
        }
      }
    }
    return seen;
  }
};

std::optional<bool> family_subsumed(const Fusion& f, const Family& fam) {
  Name bound = f.max_constant() + 1;
  if (!fam.excluded.empty()) bound = std::max(bound, *fam.excluded.rbegin() + 1);
  std::size_t cap = f.max_word() + fam.a.size() + fam.b.size() + kRefineSlack;
  std::size_t depth_reached = 0;
  bool undecided = false;
  std::function<bool(const Word&)> rec = [&](const Word& p) {
    auto c = generic_class(f, concat(p, fam.a));
    if (c) return c->count(concat(p, fam.b)) > 0;
    if (p.size() >= cap) {
      undecided = true;
      return true;
    }
    depth_reached = std::max(depth_reached, p.size() + 1);
    return rec(prepend(1, p)) && rec(prepend(2, p));
  };
  if (!rec(Word{})) return false;
  Name limit = undecided ? std::max<Name>(fusion_limits().sample_bound, bound)
                         : (bound + 1) << std::min<std::size_t>(depth_reached, 40);
  for (Name n = 0; n < limit; ++n) {
    if (fam.excluded.count(n)) continue;
    if (!related(f, tag_or_throw(n, fam.a), tag_or_throw(n, fam.b))) return false;
  }
  if (undecided) return std::nullopt;
  return true;
}

Fusion merge_siblings(const std::vector<Family>& in) {
  std::vector<Family> fams = in;
  bool changed = true;
  auto tail = [](const Word& w) {
    Word t;
    t.letters.assign(w.letters.begin() + 1, w.letters.end());
    return t;
  };
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < fams.size() && !changed; ++i) {
      const Family& f1 = fams[i];
      if (f1.a.empty() || f1.b.empty() || f1.a.letters[0] != 1 || f1.b.letters[0] != 1) continue;
      Word x = tail(f1.a), y = tail(f1.b);
      for (std::size_t j = 0; j < fams.size(); ++j) {
        const Family& f2 = fams[j];
        if (f2.a == prepend(2, x) && f2.b == prepend(2, y)) {
          Family m{x, y, {}};
          for (Name n : f1.excluded) m.excluded.insert(2 * n + 1);
          for (Name n : f2.excluded) m.excluded.insert(2 * n);
          std::size_t hi = std::max(i, j), lo = std::min(i, j);
          fams.erase(fams.begin() + static_cast<std::ptrdiff_t>(hi));
          fams.erase(fams.begin() + static_cast<std::ptrdiff_t>(lo));
          fams.push_back(std::move(m));
          changed = true;
          break;
        }
      }
    }
  }
  Fusion out;
  for (auto& f : fams) out.add_family(f);
  return out;
}

// Rebuilds generators for the relation described by s: families from the generic classes,
// exclusions and finite chains from concrete checks below the bound.
Fusion normalize(const Sem& s) {
  std::vector<std::pair<Word, std::set<Word>>> leaves;
  std::size_t depth = 0;
  std::size_t cap = s.width + kRefineSlack;
  std::function<void(const Word&)> explore = [&](const Word& w) {
    auto c = s.generic(w);
    if (c) {
      depth = std::max(depth, w.size());
      if (c->size() > 1) leaves.emplace_back(w, *c);
      return;
    }
    if (w.size() >= cap) throw Error(ErrorKind::not_representable, "fusion does not stabilise on residue classes");
    explore(prepend(1, w));
    explore(prepend(2, w));
  };
  explore(Word{});

  std::map<Name, std::set<Name>> cache;
  auto truth = [&](Name x) -> const std::set<Name>& {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, s.concrete(x)).first;
    return it->second;
  };

  std::set<std::pair<Word, Word>> words;
  for (const auto& [w, cls] : leaves)
    for (const auto& v : cls)
      if (v != w) words.insert(w < v ? std::pair{w, v} : std::pair{v, w});
  std::vector<Family> fams;
  for (const auto& [a, b] : words) {
    Family f{a, b, {}};
    for (Name n = 0; n < s.bound; ++n)
      if (!truth(tag_or_throw(n, a)).count(tag_or_throw(n, b))) f.excluded.insert(n);
    fams.push_back(std::move(f));
  }
  Fusion merged = merge_siblings(fams);

  Fusion lean;
  std::vector<Family> kept = merged.families();
  for (std::size_t i = kept.size(); i-- > 0;) {
    Fusion others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.add_family(kept[j]);
    auto sub = family_subsumed(others, kept[i]);
    if (sub && *sub) kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
  }
  for (auto& f : kept) lean.add_family(f);

  Name range = s.bound << std::min<std::size_t>(depth, 40);
  for (Name z = 0; z < range; ++z) {
    const auto& t = truth(z);
    if (t.size() == 1) continue;
    auto cur = class_of(lean, z);
    for (Name y : t) {
      if (cur.count(y)) continue;
      lean.add_pair(z, y);
      cur = class_of(lean, z);
    }
  }
  return lean;
}

}  // namespace

FusionLimits& fusion_limits() {
  static FusionLimits limits;
  return limits;
}

void Fusion::add_pair(Name x, Name y) {
  if (x == y) return;
  pairs_.insert({std::min(x, y), std::max(x, y)});
}

void Fusion::add_family(Family f) {
  if (f.a == f.b) return;
  if (f.b < f.a) std::swap(f.a, f.b);
  for (auto& g : families_) {
    if (g.a == f.a && g.b == f.b) {
      std::set<Name> both;
      std::set_intersection(g.excluded.begin(), g.excluded.end(), f.excluded.begin(), f.excluded.end(),
                            std::inserter(both, both.end()));
      g.excluded = std::move(both);
      return;
    }
  }
  families_.push_back(std::move(f));
  std::sort(families_.begin(), families_.end());
}

std::vector<Name> Fusion::neighbors(Name x) const {
  std::vector<Name> out;
  for (const auto& [a, b] : pairs_) {
    if (a == x) out.push_back(b);
    if (b == x) out.push_back(a);
  }
  for (const auto& f : families_) {
    if (auto n = untag(x, f.a); n && !f.excluded.count(*n)) out.push_back(tag_or_throw(*n, f.b));
    if (auto n = untag(x, f.b); n && !f.excluded.count(*n)) out.push_back(tag_or_throw(*n, f.a));
  }
  return out;
}

Name Fusion::max_constant() const {
  Name m = 0;
  for (const auto& [a, b] : pairs_) m = std::max({m, a, b});
  for (const auto& f : families_)
    if (!f.excluded.empty()) m = std::max(m, *f.excluded.rbegin());
  return m;
}

std::size_t Fusion::max_word() const {
  std::size_t m = 0;
  for (const auto& f : families_) m = std::max({m, f.a.size(), f.b.size()});
  return m;
}

bool validate(const Fusion& e, std::size_t budget) {
  std::set<Name> done;
  auto probe = [&](Name x) {
    if (done.count(x)) return true;
    try {
      auto c = bfs_class(e, x, budget);
      done.insert(c.begin(), c.end());
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  for (const auto& [a, b] : e.pairs())
    if (!probe(a) || !probe(b)) return false;
  for (const auto& f : e.families())
    for (Name n = 0; n < fusion_limits().sample_bound; ++n) {
      auto xa = checked_tag(n, f.a);
      auto xb = checked_tag(n, f.b);
      if (!xa || !xb || !probe(*xa) || !probe(*xb)) return false;
    }
  return true;
}

bool validate(const Fusion& e) { return validate(e, fusion_limits().class_budget); }

std::set<Name> class_of(const Fusion& e, Name x) { return bfs_class(e, x, fusion_limits().class_budget); }

bool related(const Fusion& e, Name x, Name y) { return x == y || class_of(e, x).count(y) > 0; }

std::optional<std::set<Word>> generic_class(const Fusion& e, const Word& v) {
  std::set<Word> seen{v};
  std::deque<Word> todo{v};
  while (!todo.empty()) {
    Word u = todo.front();
    todo.pop_front();
    for (const auto& f : e.families()) {
      for (int side = 0; side < 2; ++side) {
        const Word& p = side ? f.b : f.a;
        const Word& q = side ? f.a : f.b;
        if (p.size() <= u.size()) {
          if (!ends_with(u, p)) continue;
          Word w = concat(drop_suffix(u, p.size()), q);
          if (seen.insert(w).second) {
            if (seen.size() > fusion_limits().class_budget)
              throw Error(ErrorKind::invalid_fusion, "generic class exceeds the budget");
            todo.push_back(std::move(w));
          }
        } else if (ends_with(p, u)) {
          return std::nullopt;
        }
      }
    }
  }
  return seen;
}

Fusion join(const Fusion& e, const Fusion& f) {
  Fusion out = e;
  for (const auto& [a, b] : f.pairs()) out.add_pair(a, b);
  for (const auto& fam : f.families()) out.add_family(fam);
  if (!validate(out)) throw Error(ErrorKind::invalid_fusion, "join has an oversized class");
  return out;
}

Fusion meet(const Fusion& e, const Fusion& f) {
  GenSem a(e), b(f);
  return normalize(MeetSem(a, b));
}

Fusion restrict(const Fusion& e, const NameSet& x) {
  if (x.universal || e.is_delta()) return e;
  GenSem base(e);
  return normalize(FilterSem(base, x, false));
}

Fusion remove(const Fusion& e, const NameSet& x) {
  if (x.empty() || e.is_delta()) return e;
  if (x.universal) return Fusion{};
  GenSem base(e);
  return normalize(FilterSem(base, x, true));
}

Fusion map_fusion(const Fusion& e, const Substitution& sigma) {
  if (e.is_delta()) return e;
  if (sigma.is_pure_remap() && sigma.word_remaps().empty()) return e;
  GenSem base(e);
  return normalize(MapSem(base, sigma));
}

Fusion relabel(const Fusion& e, const Word& w) {
  Fusion out;
  for (const auto& [a, b] : e.pairs()) out.add_pair(tag_or_throw(a, w), tag_or_throw(b, w));
  for (const auto& f : e.families()) out.add_family(Family{concat(f.a, w), concat(f.b, w), f.excluded});
  return out;
}

Fusion unrelabel(const Fusion& e, const Word& w) {
  Fusion out;
  for (const auto& [a, b] : e.pairs()) {
    auto ua = untag(a, w), ub = untag(b, w);
    if (!ua || !ub)
      throw Error(ErrorKind::invalid_argument, "fusion pair " + std::to_string(a) + "~" + std::to_string(b) +
                                                   " is not inside @" + to_string(w));
    out.add_pair(*ua, *ub);
  }
  for (const auto& f : e.families()) {
    if (!ends_with(f.a, w) || !ends_with(f.b, w))
      throw Error(ErrorKind::invalid_argument, "fusion family [" + to_string(f.a) + " <-> " + to_string(f.b) +
                                                   "] is not inside @" + to_string(w));
    out.add_family(Family{drop_suffix(f.a, w.size()), drop_suffix(f.b, w.size()), f.excluded});
  }
  return out;
}

Name min_rep(const Fusion& e, Name x) { return *class_of(e, x).begin(); }

Name second_rep(const Fusion& e, Name x) {
  auto c = class_of(e, x);
  c.erase(x);
  return c.empty() ? x : *c.begin();
}

Substitution canonical_subst(const Fusion& e, const std::set<Name>& domain) {
  std::map<Name, Name> m;
  for (Name x : domain) m[x] = min_rep(e, x);
  return Substitution(std::move(m), {});
}

bool in_support(const Fusion& e, Name x) { return class_of(e, x).size() > 1; }

std::optional<bool> subsumed_exact(const Fusion& e, const Fusion& f) {
  for (const auto& [a, b] : e.pairs())
    if (!related(f, a, b)) return false;
  bool undecided = false;
  for (const auto& fam : e.families()) {
    auto r = family_subsumed(f, fam);
    if (!r) undecided = true;
    else if (!*r) return false;
  }
  if (undecided) return std::nullopt;
  return true;
}

bool equal(const Fusion& e, const Fusion& f) {
  // Undecided families were already sampled below sample_bound by family_subsumed.
  auto l = subsumed_exact(e, f);
  if (l && !*l) return false;
  auto r = subsumed_exact(f, e);
  return !(r && !*r);
}

Fusion delta() { return {}; }

Fusion identity_I() {
  Fusion e;
  e.add_family(Word{1}, Word{2});
  return e;
}

Fusion psi() {
  Fusion e;
  e.add_family(Word{1}, Word{1, 2});
  return e;
}

Fusion phi() {
  Fusion e;
  e.add_family(Word{1}, Word{1, 2});
  e.add_family(Word{1, 2}, Word{2, 2});
  return e;
}

Fusion sigma_tau(const Substitution& tau) {
  if (!tau.is_pure_remap()) throw Error(ErrorKind::invalid_argument, "sigma_tau needs a pure word remap");
  Fusion e;
  for (const auto& [u, v] : tau.word_remaps()) e.add_family(u, v);
  return e;
}

std::string to_string(const Fusion& e) {
  std::map<Name, Name> parent;
  std::function<Name(Name)> find = [&](Name x) {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return it->second = find(it->second);
  };
  for (const auto& [a, b] : e.pairs()) {
    parent.emplace(a, a);
    parent.emplace(b, b);
    Name ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<Name, std::vector<Name>> chains;
  for (const auto& [x, p] : parent) {
    (void)p;
    chains[find(x)].push_back(x);
  }
  std::vector<std::string> items;
  for (const auto& [root, members] : chains) {
    (void)root;
    std::string s;
    for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "~" : "") + std::to_string(members[i]);
    items.push_back(s);
  }
  for (const auto& f : e.families()) {
    std::string s = "[" + to_string(f.a) + " <-> " + to_string(f.b);
    if (!f.excluded.empty()) {
      s += " \\ ";
      bool first = true;
      for (Name n : f.excluded) {
        s += (first ? "" : ",") + std::to_string(n);
        first = false;
      }
    }
    items.push_back(s + "]");
  }
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

Fusion parse_fusion(Cursor& c) {
  c.expect("{");
  Fusion e;
  if (!c.accept("}")) {
    do {
      if (c.accept("[")) {
        Family f{parse_word(c), {}, {}};
        c.expect("<->");
        f.b = parse_word(c);
        if (c.accept("\\")) {
          do f.excluded.insert(c.natural());
          while (c.accept(","));
        }
        c.expect("]");
        e.add_family(std::move(f));
      } else {
        Name prev = parse_name(c);
        while (c.accept("~")) {
          Name next = parse_name(c);
          e.add_pair(prev, next);
          prev = next;
        }
      }
    } while (c.accept(","));
    c.expect("}");
  }
  if (!validate(e)) throw Error(ErrorKind::invalid_fusion, "literal " + to_string(e) + " has an oversized class");
  return e;
}

Fusion parse_fusion(std::string_view text) {
  Cursor c(text);
  auto e = parse_fusion(c);
  c.expect_end();
  return e;
}

}  // namespace pwfcalc
