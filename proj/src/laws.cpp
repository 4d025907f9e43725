#include "pwfcalc/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "pwfcalc/realizability.hpp"

namespace pwfcalc {

namespace {

std::size_t below(std::mt19937& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

Fusion random_fusion(std::mt19937& rng, Name names, std::size_t max_class, std::size_t max_links) {
  std::vector<Name> pool(names);
  std::iota(pool.begin(), pool.end(), Name{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  Fusion e;
  std::size_t at = 0, links = below(rng, max_links + 1);
  while (links > 0 && at + 1 < pool.size()) {
    std::size_t size = 2 + below(rng, std::max<std::size_t>(max_class, 2) - 1);
    size = std::min({size, pool.size() - at, links + 1});
    for (std::size_t k = 1; k < size; ++k) e.add_pair(pool[at], pool[at + k]);
    links -= size - 1;
    at += size;
  }
  return e;
}

namespace {

Process random_body(std::mt19937& rng, std::size_t actions, const RandomShape& s, Name& next_binder) {
  if (actions == 0) return Process::nil();
  if (actions >= 2 && below(rng, 3) == 0) {
    std::size_t left = 1 + below(rng, actions - 1);
    Process l = random_body(rng, left, s, next_binder);
    return Process::par(l, random_body(rng, actions - left, s, next_binder));
  }
  Name subject = below(rng, s.names);
  Polarity pol = below(rng, 2) ? Polarity::up : Polarity::down;
  std::vector<Name> bound;
  if (below(rng, 2)) bound.push_back(next_binder++);
  Process body = random_body(rng, actions - 1, s, next_binder);
  Process out = Process::act(subject, pol, bound, body);
  if (below(rng, 5) == 0) out = Process::nu(below(rng, s.names), out);
  return out;
}

}  // namespace

Process random_process(std::mt19937& rng, const RandomShape& s) {
  Name next_binder = s.names;
  return random_body(rng, below(rng, s.max_actions + 1), s, next_binder);
}

Pwf random_pwf(std::mt19937& rng, const RandomShape& s) {
  Process p = random_process(rng, s);
  return {p, random_fusion(rng, s.names, s.max_class, s.max_pairs)};
}

namespace {

void tally(Report& r, const std::string& name, std::size_t failures, std::size_t total, const std::string& first) {
  r.add(name + " (" + std::to_string(total) + " cases)", failures == 0,
        failures ? std::to_string(failures) + " failures, first: " + first : std::string{});
}

struct Tally {
  std::size_t failures = 0, total = 0;
  std::string first;
  void check(bool ok, const std::function<std::string()>& witness) {
    ++total;
    if (!ok && failures++ == 0) first = witness();
  }
};

bool same_classes(const Fusion& e, const Fusion& f, Name bound, Name& where) {
  for (Name x = 0; x < bound; ++x)
    if (class_of(e, x) != class_of(f, x)) {
      where = x;
      return false;
    }
  return true;
}

}  // namespace

Report check_fusion_laws(const LawSuiteOptions& o) {
  Report r;
  r.title = "fusion algebra";
  r.notes.push_back("seed=" + std::to_string(o.seed) + " samples=" + std::to_string(o.fusion_samples));
  std::mt19937 rng(o.seed);
  std::vector<Fusion> infinite{identity_I(), psi(), phi(), relabel(identity_I(), Word{2})};
  auto pick = [&]() {
    Fusion e = random_fusion(rng, 8, 3, 4);
    return below(rng, 4) == 0 ? join(e, infinite[below(rng, infinite.size())]) : e;
  };
  auto finite = [&]() { return random_fusion(rng, 8, 3, 4); };
  std::map<std::string, Tally> t;
  const std::vector<NameSet> sets{NameSet::of({0, 1}), NameSet::of({2}), NameSet::residue(Word{1}),
                                  NameSet::residue(Word{2}), NameSet::residue(Word{1, 2}), NameSet::of({3, 5, 7})};
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < o.fusion_samples; ++i) {
    Fusion e = pick(), f = pick(), g = pick();
    try {
      (void)join(join(e, f), g);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    auto w = [&] { return to_string(e) + " " + to_string(f) + " " + to_string(g); };
    t["join commutative"].check(equal(join(e, f), join(f, e)), w);
    t["join associative"].check(equal(join(join(e, f), g), join(e, join(f, g))), w);
    t["join idempotent"].check(equal(join(e, e), e), w);
    t["Delta is the join unit"].check(equal(join(e, delta()), e), w);
    Fusion a = finite(), b = finite(), c = finite();
    auto wf = [&] { return to_string(a) + " " + to_string(b) + " " + to_string(c); };
    t["meet commutative"].check(equal(meet(a, b), meet(b, a)), wf);
    t["meet associative"].check(equal(meet(meet(a, b), c), meet(a, meet(b, c))), wf);
    t["meet idempotent"].check(equal(meet(a, a), a), wf);
    t["absorption"].check(equal(join(a, meet(a, b)), a) && equal(meet(a, join(a, b)), a), wf);
    t["meet below both"].check(subsumed_exact(meet(a, b), a) == true && subsumed_exact(meet(a, b), b) == true, wf);
    t["join above both"].check(subsumed_exact(e, join(e, f)) == true && subsumed_exact(f, join(e, f)) == true, w);
    const NameSet& x = sets[below(rng, sets.size())];
    const NameSet& y = sets[below(rng, sets.size())];
    t["(e\\X)\\Y = e\\(X u Y)"].check(equal(remove(remove(e, x), y), remove(e, x.unite(y))), [&] {
      return to_string(e) + " X=" + to_string(x) + " Y=" + to_string(y);
    });
  }
  r.notes.push_back(std::to_string(skipped) + " samples skipped: their join has an infinite class");
  for (const auto& [name, v] : t) tally(r, name, v.failures, v.total, v.first);

  Fusion e = parse_fusion("{0~1}"), f = parse_fusion("{1~2}"), g = parse_fusion("{0~2}");
  Fusion lhs = meet(join(e, f), g), rhs = join(meet(e, g), meet(f, g));
  r.add("semi-distributivity counterexample: (e v f) n g relates 0 and 2", related(lhs, 0, 2), to_string(lhs));
  r.add("semi-distributivity counterexample: (e n g) v (f n g) = Delta", equal(rhs, delta()), to_string(rhs));
  return r;
}

Report check_injection_corollaries(const LawSuiteOptions& o) {
  Report r;
  r.title = "injection corollaries";
  r.notes.push_back("seed=" + std::to_string(o.seed) + " samples=" + std::to_string(o.injection_samples) +
                    " probe=[0," + std::to_string(o.probe_bound) + ")");
  std::mt19937 rng(o.seed + 1);
  const NameSet n1 = NameSet::residue(Word{1});
  const Word w1{1}, w2{2}, w12{1, 2};
  Tally a, b, c;
  for (std::size_t i = 0; i < o.injection_samples; ++i) {
    Fusion e = random_fusion(rng, 16, 4, 6), f = random_fusion(rng, 16, 4, 6);
    Fusion e1 = relabel(e, w1), f2 = relabel(f, w2), i2 = relabel(identity_I(), w2);
    Name where = 0;
    auto w = [&] { return to_string(e) + " " + to_string(f) + " at " + std::to_string(where); };
    a.check(same_classes(remove(join(join(e1, f2), phi()), n1), join(join(relabel(e, w12), f2), i2), o.probe_bound,
                         where),
            w);
    b.check(same_classes(remove(join(join(e1, f2), identity_I()), n1), join(relabel(e, w2), f2), o.probe_bound, where),
            w);
    c.check(same_classes(remove(join(e1, phi()), n1), join(relabel(e, w12), i2), o.probe_bound, where), w);
  }
  tally(r, "e1 f2 Phi \\ N1 = e^1.2 f2 I2", a.failures, a.total, a.first);
  tally(r, "e1 f2 I \\ N1 = e2 f2", b.failures, b.total, b.first);
  tally(r, "e1 Phi \\ N1 = e^1.2 I2", c.failures, c.total, c.first);
  return r;
}

Report check_nu_laws(const LawSuiteOptions& o) {
  (void)o;
  Report r;
  r.title = "nu binder";
  PwfOptions saved = pwf_options();
  r.notes.push_back(std::string("nu_closure=") + (saved.nu_closure == NuClosure::literal ? "literal" : "class-closure"));

  Pwf n1 = nu(parse_nameset("@1"), parse_pwf("<1!() ; {1~3, 5~4}>"));
  r.add("nu over N1 example", to_string(n1) == "<new 3. 3!() ; {}>", to_string(n1));

  Pwf finite_in = parse_pwf("<0!().1?() ; {0~1~2, 3~4}>");
  Pwf finite_expect = parse_pwf("<new 2. 2!().2?() ; {}>");
  pwf_options().nu_closure = NuClosure::class_closure;
  Pwf got = nu(NameSet::of({0, 3}), finite_in);
  pwf_options() = saved;
  r.add("finite nu example under class-closure", equal_pwf(got, finite_expect), to_string(got));

  UniverseSpec spec;
  spec.actions = 2;
  spec.names = 4;
  spec.arity = 1;
  spec.fusions = {parse_fusion("{}"), parse_fusion("{0~1}"), parse_fusion("{1~2~3}"), parse_fusion("{0~3, 1~2}"),
                  parse_fusion("{0~1~2~3}")};
  auto members = enumerate_universe(spec);
  Tally t;
  for (const auto& p : members)
    for (Name x = 0; x < 4; ++x)
      for (Name y = x + 1; y < 4; ++y)
        t.check(equal_pwf(nu_name(x, nu_name(y, p)), nu_name(y, nu_name(x, p))),
                [&] { return to_string(p) + " x=" + std::to_string(x) + " y=" + std::to_string(y); });
  tally(r, "nu commutation over " + std::to_string(members.size()) + " enumerated PWF", t.failures, t.total, t.first);
  return r;
}

Report check_adjoint_parallel(const LawSuiteOptions& o) {
  Report r;
  r.title = "parallel from adjoint";
  r.notes.push_back("seed=" + std::to_string(o.seed) + " samples=" + std::to_string(o.parallel_samples));
  std::mt19937 rng(o.seed + 2);
  RandomShape s;
  Tally t;
  Pwf phi_p = phi_pwf();
  for (std::size_t i = 0; i < o.parallel_samples; ++i) {
    Pwf p = random_pwf(rng, s), q = random_pwf(rng, s);
    t.check(equal_pwf(star(1, star(1, phi_p, p), q), par(p, q)), [&] { return to_string(p) + " " + to_string(q); });
  }
  tally(r, "Phi *1 p *1 q = p | q", t.failures, t.total, t.first);
  return r;
}

Report check_adequacy_lemmas(const LawSuiteOptions& o) {
  Report r;
  r.title = "adequacy lemmas";
  r.notes.push_back("seed=" + std::to_string(o.seed) + " samples=" + std::to_string(o.lemma_samples));
  std::mt19937 rng(o.seed + 3);
  RandomShape s;
  for (const auto& entry : realizer_catalog()) {
    Tally restriction, closure;
    for (std::size_t i = 0; i < o.lemma_samples; ++i) {
      std::vector<Pwf> comps;
      for (std::size_t k = 0; k < entry.layout.size(); ++k) comps.push_back(random_pwf(rng, s));
      auto w = [&] {
        std::string out;
        for (const auto& c : comps) out += to_string(c) + " ";
        return out;
      };
      LemmaCheck c = check_lemma(entry, comps);
      restriction.check(c.restriction, w);
      if (c.closure_applicable) closure.check(c.closure, w);
    }
    tally(r, entry.label + " restriction", restriction.failures, restriction.total, restriction.first);
    if (closure.total) tally(r, entry.label + " closure", closure.failures, closure.total, closure.first);
  }
  return r;
}

}  // namespace pwfcalc
