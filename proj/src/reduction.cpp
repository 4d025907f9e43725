#include "pwfcalc/reduction.hpp"

#include <algorithm>
#include <map>

namespace pwfcalc {

namespace {

constexpr Name kScratch = Name{1} << 61;

struct Prenex {
  std::vector<Name> restricted;
  std::vector<Process> acts;
};

void prenex(const Process& p, Prenex& out, Name& counter) {
  switch (p.kind()) {
    case Process::Kind::nil: return;
    case Process::Kind::par:
      prenex(p.left(), out, counter);
      prenex(p.right(), out, counter);
      return;
    case Process::Kind::act: out.acts.push_back(p); return;
    case Process::Kind::nu: {
      Name t = kScratch + counter++;
      out.restricted.push_back(t);
      prenex(substitute(p.body(), Substitution::single(p.binder(), t)), out, counter);
      return;
    }
  }
}

Process rebind(const Process& p, const std::vector<Name>& subject, const std::vector<Name>& common) {
  std::map<Name, Name> m;
  for (std::size_t i = 0; i < subject.size(); ++i) m[subject[i]] = common[i];
  return substitute(p, Substitution(std::move(m), {}));
}

}  // namespace

std::vector<Pwf> step(const Pwf& p) {
  Name counter = 0;
  Prenex pre;
  prenex(p.proc, pre, counter);
  std::set<Name> restricted(pre.restricted.begin(), pre.restricted.end());
  // A restricted name is related only to itself.
  auto linked = [&](Name u, Name v) {
    if (u == v) return true;
    if (restricted.count(u) || restricted.count(v)) return false;
    return related(p.fus, u, v);
  };

  std::vector<Pwf> out;
  for (std::size_t i = 0; i < pre.acts.size(); ++i) {
    const Process& snd = pre.acts[i];
    if (snd.polarity() != Polarity::up) continue;
    for (std::size_t j = 0; j < pre.acts.size(); ++j) {
      const Process& rcv = pre.acts[j];
      if (i == j || rcv.polarity() != Polarity::down) continue;
      if (snd.bound().size() != rcv.bound().size() || !linked(snd.subject(), rcv.subject())) continue;
      std::vector<Name> common;
      for (std::size_t k = 0; k < snd.bound().size(); ++k) common.push_back(kScratch + counter++);
      Process fired = Process::nu_all(
          common, Process::par(rebind(snd.body(), snd.bound(), common), rebind(rcv.body(), rcv.bound(), common)));
      std::vector<Process> rest{fired};
      for (std::size_t k = 0; k < pre.acts.size(); ++k)
        if (k != i && k != j) rest.push_back(pre.acts[k]);
      Process whole = Process::nu_all(pre.restricted, Process::par_all(rest));
      whole = tidy(freshen_bound(whole, [](Name x) { return x < kScratch; }));
      Pwf r{whole, p.fus};
      bool seen = std::any_of(out.begin(), out.end(), [&](const Pwf& q) { return equal_pwf(q, r); });
      if (!seen) out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const Pwf& a, const Pwf& b) {
    return to_string(canonical(a.proc)) < to_string(canonical(b.proc));
  });
  return out;
}

bool reduces_within(const Pwf& p, const Pwf& target, std::size_t k) {
  std::set<std::string> seen{canonical_key(representative(p))};
  std::vector<Pwf> frontier{p};
  for (std::size_t depth = 0;; ++depth) {
    for (const auto& q : frontier)
      if (equal_pwf(q, target)) return true;
    if (depth == k) return false;
    std::vector<Pwf> next;
    for (const auto& q : frontier)
      for (auto& r : step(q))
        if (seen.insert(canonical_key(representative(r))).second) next.push_back(std::move(r));
    if (next.empty()) return false;
    frontier = std::move(next);
  }
}

Pole pole_always() { return {"always", [](const Pwf&) { return true; }, true}; }

Pole pole_done(std::size_t k) {
  return {"done:" + std::to_string(k), [k](const Pwf& p) { return reduces_within(p, unit(), k); }};
}

Pole pole_exactly_unit() {
  return {"exactly-unit", [](const Pwf& p) { return equal_pwf(p, unit()); }};
}

bool pole_regular_on(const Pole& pole, const std::vector<Pwf>& universe) {
  for (const auto& p : universe) {
    for (const auto& q : step(p)) {
      for (const auto& r : universe) {
        if (pole(nu_all(par(q, r))) && !pole(nu_all(par(p, r)))) return false;
      }
    }
  }
  return true;
}

}  // namespace pwfcalc
