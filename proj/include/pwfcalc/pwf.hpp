#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pwfcalc/fusion.hpp"
#include "pwfcalc/process.hpp"

namespace pwfcalc {

struct Pwf {
  Process proc;
  Fusion fus;
};

enum class NuClosure { literal, class_closure };
enum class NuSeed { fn, np };

struct PwfOptions {
  NuClosure nu_closure = NuClosure::literal;
  NuSeed nu_seed = NuSeed::fn;
};
PwfOptions& pwf_options();

// N_P: names whose class meets Fn(P).
std::set<Name> np_names(const Pwf& p);
bool fn_contains(const Pwf& p, Name x);
// N_P together with the endpoints of the finite generators of the fusion.
std::set<Name> fn_finite_part(const Pwf& p);

// P with sigma_e applied to its free names; equal_pwf compares these up to congruence.
Process representative(const Pwf& p);
bool equal_pwf(const Pwf& p, const Pwf& q);

Pwf unit();
Pwf par(const Pwf& p, const Pwf& q);
Pwf prefix(Name u, Polarity pol, const std::vector<Name>& xs, const Pwf& p);

Pwf nu_name(Name x, const Pwf& p);
Pwf nu_finite(const std::set<Name>& xs, const Pwf& p);

struct HereditaryClosure {
  std::set<Name> names;
  Substitution sigma;
};
HereditaryClosure hereditary_closure(const NameSet& x, const Pwf& p);
Pwf nu_set(const NameSet& x, const Pwf& p);
Pwf nu_all(const Pwf& p);
// Dispatches finite sets to nu_finite and residue or universal sets to nu_set.
Pwf nu(const NameSet& x, const Pwf& p);

Pwf relabel(const Pwf& p, const Word& w);
Pwf relabel(const Pwf& p, int i);
Pwf unrelabel(const Pwf& p, const Word& w);
Pwf unrelabel(const Pwf& p, int i);

Pwf bullet(const Pwf& p, const Pwf& q);
Pwf star(int i, const Pwf& p, const Pwf& q);
Pwf phi_pwf();

// A realizer sigma_tau with the component layout of its lemma: component k sits at
// layout[k]; target[k] is where the lemma's right-hand side places it, when it has one.
struct RealizerTau {
  std::string label;
  Substitution tau;
  std::vector<Word> layout;
  std::vector<std::optional<Word>> target;

  Fusion fusion() const { return sigma_tau(tau); }
};
const std::vector<RealizerTau>& realizer_catalog();
const RealizerTau& catalog_entry(const std::string& label);

// The two identities behind each lemma: binding the domain of tau applies tau,
// and closing the whole composition agrees with the target layout.
struct LemmaCheck {
  bool restriction = false;
  bool closure = false;
  bool closure_applicable = false;
};
LemmaCheck check_lemma(const RealizerTau& r, const std::vector<Pwf>& comps);

std::string to_string(const Pwf& p);
std::string to_string_canonical(const Pwf& p);
Pwf parse_pwf(Cursor& c);
Pwf parse_pwf(std::string_view text);

}  // namespace pwfcalc
