#include "pwfcalc/realizability.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

namespace pwfcalc {

namespace {

std::vector<std::vector<Name>> binder_vectors(Name names, std::size_t arity) {
  std::vector<std::vector<Name>> out{{}};
  std::vector<std::vector<Name>> layer{{}};
  for (std::size_t a = 1; a <= arity; ++a) {
    std::vector<std::vector<Name>> next;
    for (const auto& v : layer)
      for (Name x = 0; x < names; ++x)
        if (std::find(v.begin(), v.end(), x) == v.end()) {
          auto w = v;
          w.push_back(x);
          next.push_back(w);
        }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Processes with exactly k prefixes and no restriction.
std::vector<Process> shapes(std::size_t k, Name names, const std::vector<std::vector<Name>>& binders,
                            std::map<std::size_t, std::vector<Process>>& memo) {
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  std::vector<Process> out;
  if (k == 0) {
    out.push_back(Process::nil());
  } else {
    for (const auto& cont : shapes(k - 1, names, binders, memo))
      for (Name u = 0; u < names; ++u)
        for (Polarity pol : {Polarity::up, Polarity::down})
          for (const auto& xs : binders) out.push_back(Process::act(u, pol, xs, cont));
    for (std::size_t i = 1; 2 * i <= k; ++i)
      for (const auto& l : shapes(i, names, binders, memo))
        for (const auto& r : shapes(k - i, names, binders, memo)) out.push_back(Process::par(l, r));
  }
  memo[k] = out;
  return out;
}

std::string key_of(const Pwf& p) { return canonical_key(representative(p)) + "|" + to_string(p.fus); }

}  // namespace

UniverseSpec parse_universe_spec(std::string_view text) {
  UniverseSpec s;
  Cursor c(text);
  while (!c.at_end()) {
    std::string key = c.identifier();
    c.expect("=");
    if (key == "actions") s.actions = c.natural();
    else if (key == "names") s.names = c.natural();
    else if (key == "arity") s.arity = c.natural();
    else if (key == "fusions") {
      s.fusions.clear();
      do s.fusions.push_back(parse_fusion(c));
      while (c.accept(","));
    } else {
      c.fail("unknown universe key '" + key + "'");
    }
    if (!c.accept(";")) break;
  }
  c.expect_end();
  if (s.names == 0 || s.fusions.empty()) throw Error(ErrorKind::invalid_argument, "empty universe spec");
  return s;
}

std::string to_string(const UniverseSpec& s) {
  std::string out = "actions=" + std::to_string(s.actions) + ";names=" + std::to_string(s.names) +
                    ";arity=" + std::to_string(s.arity) + ";fusions=";
  for (std::size_t i = 0; i < s.fusions.size(); ++i) out += (i ? "," : "") + to_string(s.fusions[i]);
  return out;
}

std::vector<Pwf> enumerate_universe(const UniverseSpec& s) {
  auto binders = binder_vectors(s.names, s.arity);
  std::map<std::size_t, std::vector<Process>> memo;
  std::vector<Process> procs;
  for (std::size_t k = 0; k <= s.actions; ++k) {
    for (const auto& p : shapes(k, s.names, binders, memo)) {
      procs.push_back(p);
      for (Name x : free_names(p)) procs.push_back(Process::nu(x, p));
    }
  }
  std::vector<Pwf> out;
  std::set<std::string> seen;
  for (const auto& e : s.fusions)
    for (const auto& p : procs) {
      bool guarded = true;
      std::function<void(const Process&)> walk = [&](const Process& q) {
        switch (q.kind()) {
          case Process::Kind::nil: return;
          case Process::Kind::par: walk(q.left()); walk(q.right()); return;
          case Process::Kind::nu: walk(q.body()); return;
          case Process::Kind::act:
            for (Name x : q.bound())
              if (in_support(e, x)) guarded = false;
            walk(q.body());
            return;
        }
      };
      walk(p);
      if (!guarded) continue;
      Pwf w{p, e};
      if (seen.insert(key_of(w)).second) out.push_back(std::move(w));
    }
  return out;
}

Pole parse_pole(std::string_view text) {
  if (text == "always") return pole_always();
  if (text.substr(0, 5) == "done:") {
    Cursor c(text.substr(5));
    auto k = c.natural();
    c.expect_end();
    return pole_done(k);
  }
  throw Error(ErrorKind::parse, "unknown pole '" + std::string(text) + "'");
}

Universe::Universe(std::vector<Pwf> members, Pole pole) : members_(std::move(members)), pole_(std::move(pole)) {
  const std::size_t n = members_.size();
  matrix_.assign(n, std::vector<bool>(n, false));
  std::vector<std::vector<char>> rows(n, std::vector<char>(n, 0));
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers)
        for (std::size_t j = i; j < n; ++j) rows[i][j] = orthogonal(members_[i], members_[j]) ? 1 : 0;
    });
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) matrix_[i][j] = matrix_[j][i] = rows[i][j] != 0;
}

bool Universe::pole_holds(const Pwf& closed) const {
  if (pole_.constant) return true;
  std::string key = key_of(closed);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  bool v = pole_(closed);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(std::move(key), v);
  return v;
}

bool Universe::orthogonal(const Pwf& p, const Pwf& q) const {
  return pole_.constant || pole_holds(nu_all(par(p, q)));
}

Bits Universe::of(const std::vector<std::size_t>& idx) const {
  Bits b = none();
  for (auto i : idx) b.at(i) = true;
  return b;
}

std::vector<Pwf> Universe::elements(const Bits& a) const {
  std::vector<Pwf> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (a[i]) out.push_back(members_[i]);
  return out;
}

Bits Universe::perp(const Bits& a) const {
  Bits out = everything();
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size() && out[i]; ++j)
      if (a[j] && !matrix_[i][j]) out[i] = false;
  return out;
}

Bits Universe::perp(const std::vector<Pwf>& xs) const {
  Bits out = everything();
  if (pole_.constant) return out;
  for (std::size_t i = 0; i < size(); ++i)
    for (const auto& x : xs)
      if (!orthogonal(members_[i], x)) {
        out[i] = false;
        break;
      }
  return out;
}

bool Universe::in_perp(const Pwf& p, const Bits& a) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (a[j] && !orthogonal(p, members_[j])) return false;
  return true;
}

std::vector<Pwf> Universe::par_image(const Bits& a, const Bits& b) const {
  std::vector<Pwf> out;
  for (const auto& p : elements(a))
    for (const auto& q : elements(b)) out.push_back(pwfcalc::par(p, q));
  return out;
}

std::vector<Pwf> Universe::bullet_image(const Bits& a, const Bits& b) const {
  std::vector<Pwf> out;
  for (const auto& p : elements(a))
    for (const auto& q : elements(b)) out.push_back(bullet(p, q));
  return out;
}

Bits Universe::parallel(const Bits& a, const Bits& b) const {
  return pole_.constant ? everything() : biperp(par_image(a, b));
}

Bits Universe::star(int i, const Bits& a, const Bits& b) const {
  if (pole_.constant) return everything();
  std::vector<Pwf> image;
  for (const auto& p : elements(a))
    for (const auto& q : elements(b)) {
      // Pairs whose application is ill-scoped contribute nothing.
      try {
        image.push_back(pwfcalc::star(i, p, q));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ill_scoped_star) throw;
      }
    }
  return biperp(image);
}

Bits Universe::tensor(const Bits& a, const Bits& b) const {
  return pole_.constant ? everything() : biperp(bullet_image(a, b));
}

Bits Universe::parr(const Bits& a, const Bits& b) const { return perp(tensor(perp(a), perp(b))); }

Bits Universe::lolli(const Bits& a, const Bits& b) const { return perp(tensor(a, perp(b))); }

Bits Universe::one() const { return biperp(std::vector<Pwf>{unit()}); }

Bits Universe::join(const std::vector<Bits>& family) const {
  Bits u = none();
  for (const auto& b : family) u = set_union(u, b);
  return biperp(u);
}

Bits set_union(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

Bits set_intersection(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

std::size_t count(const Bits& a) { return static_cast<std::size_t>(std::count(a.begin(), a.end(), true)); }

namespace {

std::string show(const Universe& u, const Bits& a) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (a[i]) {
      out += (first ? "" : ", ") + to_string(u.members()[i]);
      first = false;
    }
  return out + "}";
}

// Tracks the first counterexample of a quantified law.
struct Law {
  explicit Law(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::string witness;

  void expect(bool holds, const std::function<std::string()>& why) {
    if (!holds && pass) {
      pass = false;
      witness = why();
    }
  }
};

}  // namespace

Report check_laws(const Universe& u, const LawOptions& opts) {
  Report r;
  r.title = "realizability laws";
  r.notes.push_back("universe-relative: orthogonals range over " + std::to_string(u.size()) + " members");
  r.notes.push_back("pole=" + u.pole().name);
  r.notes.push_back("samples=" + std::to_string(opts.samples) + " seed=" + std::to_string(opts.seed));
  if (u.size() == 0) {
    r.add("nonempty universe", false, "no members");
    return r;
  }

  std::mt19937 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
  auto random_subset = [&](std::size_t max) {
    Bits b = u.none();
    std::size_t k = 1 + pick(rng) % max;
    for (std::size_t i = 0; i < k; ++i) b[pick(rng)] = true;
    return b;
  };
  auto random_behaviour = [&] { return u.biperp(random_subset(3)); };

  Law antitone{"perp antitone"}, extensive{"A in biperp(A)"}, triple{"triple perp collapses"};
  Law behaviour{"perp(A) is a behaviour"}, union_law{"perp of union is intersection of perps"};
  Law inter_law{"perp of intersection contains union of perps"}, biperp_union{"perp of union of biperps"};
  Law tensor_join{"tensor distributes over join"}, tensor_closure{"tensor ignores biperp of arguments"};
  Law par_join{"parallel below join of parallels"}, adjunction{"star_1 adjoint to lolli"};
  Law one_unit{"1 contains (1, Delta)"};

  for (std::size_t s = 0; s < opts.samples; ++s) {
    Bits a = random_subset(4), b = random_subset(4), c = random_subset(4);
    Bits ab = set_union(a, b);
    antitone.expect(subset(u.perp(ab), u.perp(a)), [&] { return "A=" + show(u, a) + " B=" + show(u, ab); });
    extensive.expect(subset(a, u.biperp(a)), [&] { return "A=" + show(u, a); });
    triple.expect(u.perp(a) == u.perp(u.biperp(a)), [&] { return "A=" + show(u, a); });
    behaviour.expect(u.is_behaviour(u.perp(a)), [&] { return "A=" + show(u, a); });
    Bits abc = set_union(ab, c);
    union_law.expect(u.perp(abc) == set_intersection(set_intersection(u.perp(a), u.perp(b)), u.perp(c)),
                     [&] { return "A=" + show(u, a) + " B=" + show(u, b) + " C=" + show(u, c); });
    inter_law.expect(subset(set_union(u.perp(a), u.perp(b)), u.perp(set_intersection(a, b))),
                     [&] { return "A=" + show(u, a) + " B=" + show(u, b); });
    biperp_union.expect(u.perp(set_union(u.biperp(a), u.biperp(b))) == u.perp(ab),
                        [&] { return "A=" + show(u, a) + " B=" + show(u, b); });
  }

  std::size_t heavy = std::max<std::size_t>(1, opts.samples / 4);
  for (std::size_t s = 0; s < heavy; ++s) {
    Bits a = random_behaviour();
    std::vector<Bits> family{random_behaviour(), random_behaviour()};
    std::vector<Bits> tensors;
    for (const auto& b : family) tensors.push_back(u.tensor(a, b));
    tensor_join.expect(u.tensor(a, u.join(family)) == u.join(tensors), [&] {
      return "A=" + show(u, a) + " B1=" + show(u, family[0]) + " B2=" + show(u, family[1]);
    });

    Bits x = random_subset(2), y = random_subset(2);
    tensor_closure.expect(u.tensor(x, y) == u.tensor(u.biperp(x), u.biperp(y)),
                          [&] { return "A=" + show(u, x) + " B=" + show(u, y); });

    Bits raw1 = random_subset(2), raw2 = random_subset(2), side = random_subset(2);
    Bits joined = u.join({raw1, raw2});
    Bits target_perp = u.perp(u.par_image(set_union(raw1, raw2), side));
    for (const auto& p : u.par_image(joined, side))
      par_join.expect(u.in_perp(p, target_perp), [&] { return "element " + to_string(p); });

    Bits cset = random_subset(2), aset = random_subset(2), bset = random_behaviour();
    bool left = subset(u.star(1, cset, aset), bset);
    bool right = subset(cset, u.lolli(aset, bset));
    adjunction.expect(left == right, [&] {
      return "C=" + show(u, cset) + " A=" + show(u, aset) + " B=" + show(u, bset) + (left ? " star holds" : " lolli holds");
    });
  }

  one_unit.expect(u.in_perp(unit(), u.perp(std::vector<Pwf>{unit()})), [] { return std::string("(1, Delta)"); });

  for (const Law* l : {&antitone, &extensive, &triple, &behaviour, &union_law, &inter_law, &biperp_union, &tensor_join,
                       &tensor_closure, &par_join, &adjunction, &one_unit})
    r.add(l->name, l->pass, l->witness);
  return r;
}

}  // namespace pwfcalc
