#include "pwfcalc/pwf.hpp"

#include <algorithm>

namespace pwfcalc {

PwfOptions& pwf_options() {
  static PwfOptions options;
  return options;
}

std::set<Name> np_names(const Pwf& p) {
  std::set<Name> out;
  for (Name x : free_names(p.proc)) {
    auto c = class_of(p.fus, x);
    out.insert(c.begin(), c.end());
  }
  return out;
}

bool fn_contains(const Pwf& p, Name x) { return in_support(p.fus, x) || free_names(p.proc).count(x) > 0; }

std::set<Name> fn_finite_part(const Pwf& p) {
  auto out = np_names(p);
  for (const auto& [a, b] : p.fus.pairs()) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

Process representative(const Pwf& p) { return substitute(p.proc, canonical_subst(p.fus, free_names(p.proc))); }

bool equal_pwf(const Pwf& p, const Pwf& q) {
  return equal(p.fus, q.fus) && struct_eq(representative(p), representative(q));
}

Pwf unit() { return {}; }

Pwf par(const Pwf& p, const Pwf& q) { return {Process::par(p.proc, q.proc), join(p.fus, q.fus)}; }

Pwf prefix(Name u, Polarity pol, const std::vector<Name>& xs, const Pwf& p) {
  for (Name x : xs)
    if (in_support(p.fus, x))
      throw Error(ErrorKind::construction_rejected,
                  "bound name " + std::to_string(x) + " is fused in " + to_string(p.fus));
  return {Process::act(u, pol, xs, p.proc), p.fus};
}

Pwf nu_name(Name x, const Pwf& p) {
  Name t = second_rep(p.fus, x);
  Process body = t == x ? p.proc : substitute(p.proc, Substitution::single(x, t));
  return {Process::nu(x, body), remove(p.fus, NameSet::of({x}))};
}

Pwf nu_finite(const std::set<Name>& xs, const Pwf& p) {
  std::set<Name> binders = xs;
  if (pwf_options().nu_closure == NuClosure::class_closure) {
    binders.clear();
    for (Name x : free_names(p.proc))
      if (xs.count(x)) {
        auto c = class_of(p.fus, x);
        binders.insert(c.begin(), c.end());
      }
  }
  Pwf r = p;
  for (Name x : binders) r = nu_name(x, r);
  if (pwf_options().nu_closure == NuClosure::class_closure) r.fus = remove(r.fus, NameSet::of(xs));
  return r;
}

HereditaryClosure hereditary_closure(const NameSet& x, const Pwf& p) {
  std::set<Name> s;
  auto seed = pwf_options().nu_seed == NuSeed::fn ? free_names(p.proc) : np_names(p);
  for (Name y : seed)
    if (x.member(y)) s.insert(y);
  while (true) {
    Substitution sigma;
    std::set<Name> earlier, next = s;
    for (Name sh : s) {
      // Second representative of sh in e minus the earlier names of the round.
      auto c = class_of(p.fus, sh);
      for (Name y : earlier) c.erase(y);
      c.erase(sh);
      Name th = c.empty() ? sh : *c.begin();
      sigma = compose(Substitution::single(sh, th), sigma);
      earlier.insert(sh);
      if (x.member(th)) next.insert(th);
    }
    if (next == s) return {s, sigma};
    s = std::move(next);
  }
}

Pwf nu_set(const NameSet& x, const Pwf& p) {
  auto hc = hereditary_closure(x, p);
  Process body = substitute(p.proc, hc.sigma);
  return {Process::nu_all(std::vector<Name>(hc.names.begin(), hc.names.end()), body), remove(p.fus, x)};
}

Pwf nu_all(const Pwf& p) { return nu_set(NameSet::all(), p); }

Pwf nu(const NameSet& x, const Pwf& p) {
  if (!x.universal && x.residues.empty()) return nu_finite(x.singletons, p);
  return nu_set(x, p);
}

Pwf relabel(const Pwf& p, const Word& w) {
  auto f = [&](Name x) {
    auto r = checked_tag(x, w);
    if (!r) throw Error(ErrorKind::not_representable, "relabelled name overflows");
    return *r;
  };
  return {map_names(p.proc, f), relabel(p.fus, w)};
}

Pwf relabel(const Pwf& p, int i) { return relabel(p, Word{i}); }

Pwf unrelabel(const Pwf& p, const Word& w) {
  for (Name x : free_names(p.proc))
    if (!untag(x, w))
      throw Error(ErrorKind::invalid_argument, "free name " + std::to_string(x) + " is not in @" + to_string(w));
  Process q = freshen_bound(p.proc, [&](Name x) { return untag(x, w).has_value(); });
  return {map_names(q, [&](Name x) { return *untag(x, w); }), unrelabel(p.fus, w)};
}

Pwf unrelabel(const Pwf& p, int i) { return unrelabel(p, Word{i}); }

Pwf bullet(const Pwf& p, const Pwf& q) { return par(relabel(p, 1), relabel(q, 2)); }

Pwf star(int i, const Pwf& p, const Pwf& q) {
  if (i != 1 && i != 2) throw Error(ErrorKind::invalid_argument, "star index must be 1 or 2");
  Pwf bound = nu_set(NameSet::residue(Word{i}), par(p, relabel(q, i)));
  try {
    return unrelabel(bound, 3 - i);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invalid_argument) throw;
    throw Error(ErrorKind::ill_scoped_star, e.what());
  }
}

Pwf phi_pwf() { return {Process::nil(), phi()}; }

const std::vector<RealizerTau>& realizer_catalog() {
  using W = Word;
  using T = std::optional<Word>;
  static const std::vector<RealizerTau> catalog = {
      {"ID", Substitution::remaps({{W{1}, W{2}}}), {W{1}, W{2}}, {T{W{}}, T{W{}}}},
      {"ASSOC_R",
       Substitution::remaps({{W{1, 1}, W{1, 1, 2}}, {W{1, 2, 1}, W{2, 1, 2}}, {W{2, 2, 1}, W{2, 2}}}),
       {W{1, 1}, W{1, 2, 1}, W{2, 2, 1}, W{2}},
       {T{W{1, 1}}, T{W{2, 1}}, T{W{2}}, T{W{}}}},
      {"ASSOC_L",
       Substitution::remaps({{W{1, 1, 1}, W{1, 2}}, {W{2, 1, 1}, W{1, 2, 2}}, {W{2, 1}, W{2, 2, 2}}}),
       {W{1, 1, 1}, W{2, 1, 1}, W{2, 1}, W{2}},
       {T{W{1}}, T{W{1, 2}}, T{W{2, 2}}, T{W{}}}},
      {"COMM", Substitution::remaps({{W{1, 1}, W{2, 2}}, {W{2, 1}, W{1, 2}}}), {W{1, 1}, W{2, 1}, W{2}},
       {T{W{2}}, T{W{1}}, T{W{}}}},
      {"UNIT_INTRO_L", Substitution::remaps({{W{1}, W{2, 2}}}), {W{1}, W{2}}, {T{W{2}}, T{W{}}}},
      {"UNIT_ELIM_L", Substitution::remaps({{W{2, 1}, W{2}}}), {W{2, 1}, W{2}}, {T{W{}}, T{W{}}}},
      {"UNIT_INTRO_R", Substitution::remaps({{W{1}, W{1, 2}}}), {W{1}, W{2}}, {T{W{1}}, T{W{}}}},
      {"UNIT_ELIM_R", Substitution::remaps({{W{1, 1}, W{2}}}), {W{1, 1}, W{2}}, {T{W{}}, T{W{}}}},
      {"COMP",
       Substitution::remaps({{W{1, 2, 2}, W{1, 1}}, {W{2, 1}, W{1, 1, 2}}, {W{2, 1, 2}, W{2, 2, 2}}}),
       {W{1}, W{1, 2}, W{1, 2, 2}, W{2, 2, 2}},
       {std::nullopt, std::nullopt, std::nullopt, std::nullopt}},
      {"CONTRA", Substitution::remaps({{W{1, 1}, W{2, 2}}, {W{2, 1}, W{1, 2}}}), {W{1}, W{2, 2}, W{1, 2}},
       {T{W{}}, T{W{1}}, T{W{2}}}},
      {"CTX",
       Substitution::remaps({{W{1, 1, 2}, W{1, 1}}, {W{2, 1, 2}, W{2, 2, 2}}, {W{1, 2, 2}, W{2, 1}}}),
       {W{1}, W{1, 1, 2}, W{2, 1, 2}, W{2, 2}},
       {std::nullopt, std::nullopt, std::nullopt, std::nullopt}},
  };
  return catalog;
}

const RealizerTau& catalog_entry(const std::string& label) {
  for (const auto& r : realizer_catalog())
    if (r.label == label) return r;
  throw Error(ErrorKind::invalid_argument, "no catalog entry " + label);
}

LemmaCheck check_lemma(const RealizerTau& r, const std::vector<Pwf>& comps) {
  if (comps.size() != r.layout.size())
    throw Error(ErrorKind::invalid_argument, r.label + " takes " + std::to_string(r.layout.size()) + " components");
  Pwf placed;
  for (std::size_t k = 0; k < comps.size(); ++k) placed = par(placed, relabel(comps[k], r.layout[k]));
  Pwf with_tau{placed.proc, join(placed.fus, r.fusion())};

  NameSet domain;
  for (const auto& [u, v] : r.tau.word_remaps()) {
    (void)v;
    domain.residues.push_back(u);
  }
  LemmaCheck out;
  Pwf bound = nu_set(domain, with_tau);
  Pwf image{substitute(placed.proc, r.tau), map_fusion(placed.fus, r.tau)};
  out.restriction = equal_pwf(bound, image);

  out.closure_applicable = std::all_of(r.target.begin(), r.target.end(), [](const auto& t) { return t.has_value(); });
  if (out.closure_applicable) {
    Pwf target;
    for (std::size_t k = 0; k < comps.size(); ++k) target = par(target, relabel(comps[k], *r.target[k]));
    out.closure = equal_pwf(nu_all(with_tau), nu_all(target));
  }
  return out;
}

std::string to_string(const Pwf& p) { return "<" + to_string(tidy(p.proc)) + " ; " + to_string(p.fus) + ">"; }

std::string to_string_canonical(const Pwf& p) {
  return "<" + to_string(canonical(p.proc)) + " ; " + to_string(p.fus) + ">";
}

Pwf parse_pwf(Cursor& c) {
  c.expect("<");
  Pwf p;
  p.proc = parse_process(c);
  c.expect(";");
  p.fus = parse_fusion(c);
  c.expect(">");
  return p;
}

Pwf parse_pwf(std::string_view text) {
  Cursor c(text);
  Pwf p = parse_pwf(c);
  c.expect_end();
  return p;
}

}  // namespace pwfcalc
