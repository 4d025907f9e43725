#include <CLI11.hpp>

#include <iostream>
#include <set>
#include <sstream>

#include "pwfcalc/calgebra.hpp"
#include "pwfcalc/config.hpp"
#include "pwfcalc/hy_encodings.hpp"
#include "pwfcalc/laws.hpp"
#include "pwfcalc/mll.hpp"
#include "pwfcalc/realizability.hpp"

using namespace pwfcalc;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInvalid = 2;

struct Settings {
  std::string config_file;
  std::vector<std::string> overrides;
  std::string format = "text";
  Config cfg;
};

int emit(const Settings& s, Report r) {
  r.notes.insert(r.notes.begin(), "config: " + to_string(s.cfg));
  std::cout << (s.format == "tsv" ? r.to_tsv() : r.to_text());
  return r.ok() ? kHolds : kFails;
}

int emit_all(const Settings& s, std::vector<Report> rs) {
  int code = kHolds;
  for (auto& r : rs)
    if (emit(s, std::move(r)) != kHolds) code = kFails;
  return code;
}

int verdict(bool holds, const std::string& witness) {
  std::cout << (holds ? "holds" : "does not hold");
  if (!holds && !witness.empty()) std::cout << "  [" << witness << "]";
  std::cout << "\n";
  return holds ? kHolds : kFails;
}

Assignment parse_assignment(const std::string& text, const FinModel& m) {
  Assignment out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::parse, "expected X=element in '" + item + "'");
    out[item.substr(0, eq)] = m.index(item.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pwfcalc: processes with fusions, realizability and finite conjunctive models"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--config", s.config_file, "key = value file (class_budget, sample_bound, nu_closure, nu_seed, "
                                             "step_bound)");
  app.add_option("--set", s.overrides, "key=value override applied after the config file");
  app.add_option("--format", s.format, "report format")->check(CLI::IsMember({"text", "tsv"}));

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  std::string a1, a2, a3;
  std::size_t steps = 0;
  std::string kind = "pwf", target;

  auto* parse = app.add_subcommand("parse", "parse and print a term");
  parse->add_option("text", a1)->required();
  parse->add_option("--kind", kind)->check(CLI::IsMember({"pwf", "process", "fusion", "nameset", "formula", "proof"}));
  on(parse, [&] {
    if (kind == "pwf") std::cout << to_string(parse_pwf(a1)) << "\n";
    if (kind == "process") std::cout << to_string(parse_process(a1)) << "\n";
    if (kind == "fusion") std::cout << to_string(parse_fusion(a1)) << "\n";
    if (kind == "nameset") std::cout << to_string(parse_nameset(a1)) << "\n";
    if (kind == "formula") std::cout << to_string(parse_formula(a1)) << "\n";
    if (kind == "proof") std::cout << to_string(parse_proof(a1)) << "\n";
    return kHolds;
  });

  auto* normalize = app.add_subcommand("normalize", "canonical form of a PWF");
  normalize->add_option("pwf", a1)->required();
  on(normalize, [&] {
    std::cout << to_string_canonical(parse_pwf(a1)) << "\n";
    return kHolds;
  });

  auto* equal_cmd = app.add_subcommand("equal", "PWF equivalence");
  equal_cmd->add_option("p", a1)->required();
  equal_cmd->add_option("q", a2)->required();
  on(equal_cmd, [&] {
    Pwf p = parse_pwf(a1), q = parse_pwf(a2);
    return verdict(equal_pwf(p, q), to_string_canonical(p) + " vs " + to_string_canonical(q));
  });

  auto* reduce = app.add_subcommand("reduce", "reducts within a number of steps");
  reduce->add_option("pwf", a1)->required();
  reduce->add_option("--steps", steps, "defaults to step_bound");
  reduce->add_option("--target", target, "exit 0 iff this PWF is reached");
  on(reduce, [&] {
    std::size_t k = steps ? steps : s.cfg.step_bound;
    Pwf p = parse_pwf(a1);
    if (!target.empty()) {
      Pwf t = parse_pwf(target);
      return verdict(reduces_within(p, t, k), "not reached within " + std::to_string(k) + " steps");
    }
    std::set<std::string> seen{to_string_canonical(p)}, reducts;
    std::vector<Pwf> frontier{p};
    for (std::size_t i = 1; i <= k && !frontier.empty(); ++i) {
      std::vector<Pwf> next;
      for (const auto& q : frontier)
        for (auto& r : step(q)) {
          std::string c = to_string_canonical(r);
          reducts.insert(c);
          if (seen.insert(c).second) next.push_back(std::move(r));
        }
      frontier = std::move(next);
    }
    for (const auto& c : reducts) std::cout << c << "\n";
    return kHolds;
  });

  bool show_closure = false;
  auto* nu_cmd = app.add_subcommand("nu", "restriction of a PWF over a name set");
  nu_cmd->add_option("names", a1)->required();
  nu_cmd->add_option("pwf", a2)->required();
  nu_cmd->add_flag("--closure", show_closure, "also print the hereditary closure and its substitution");
  on(nu_cmd, [&] {
    NameSet x = parse_nameset(a1);
    Pwf p = parse_pwf(a2);
    if (show_closure) {
      auto hc = hereditary_closure(x, p);
      std::string sigma;
      for (Name n : hc.names) sigma += (sigma.empty() ? "" : ", ") + std::to_string(n) + ":=" + std::to_string(hc.sigma(n));
      std::cout << "closure " << to_string(hc.names) << " sigma {" << sigma << "}\n";
    }
    std::cout << to_string(nu(x, p)) << "\n";
    return kHolds;
  });

  auto* fusion_cmd = app.add_subcommand("fusion", "fusion lattice operations");
  fusion_cmd->require_subcommand(1);
  auto* fjoin = fusion_cmd->add_subcommand("join", "e v f");
  fjoin->add_option("e", a1)->required();
  fjoin->add_option("f", a2)->required();
  on(fjoin, [&] {
    std::cout << to_string(join(parse_fusion(a1), parse_fusion(a2))) << "\n";
    return kHolds;
  });
  auto* frestrict = fusion_cmd->add_subcommand("restrict", "e restricted to X");
  frestrict->add_option("e", a1)->required();
  frestrict->add_option("names", a2)->required();
  on(frestrict, [&] {
    std::cout << to_string(restrict(parse_fusion(a1), parse_nameset(a2))) << "\n";
    return kHolds;
  });
  auto* fremove = fusion_cmd->add_subcommand("remove", "e without X");
  fremove->add_option("e", a1)->required();
  fremove->add_option("names", a2)->required();
  on(fremove, [&] {
    std::cout << to_string(remove(parse_fusion(a1), parse_nameset(a2))) << "\n";
    return kHolds;
  });
  auto* fclass = fusion_cmd->add_subcommand("class", "class of a name");
  fclass->add_option("e", a1)->required();
  fclass->add_option("name", a2)->required();
  on(fclass, [&] {
    Fusion e = parse_fusion(a1);
    if (!validate(e)) throw Error(ErrorKind::invalid_fusion, "class budget exceeded by " + to_string(e));
    std::cout << to_string(class_of(e, parse_name(a2))) << "\n";
    return kHolds;
  });
  auto* fequal = fusion_cmd->add_subcommand("equal", "equality of fusions");
  fequal->add_option("e", a1)->required();
  fequal->add_option("f", a2)->required();
  on(fequal, [&] {
    Fusion e = parse_fusion(a1), f = parse_fusion(a2);
    return verdict(equal(e, f), to_string(e) + " vs " + to_string(f));
  });

  int star_index = 1;
  auto* star_cmd = app.add_subcommand("star", "adjoint application p *i q");
  star_cmd->add_option("i", star_index)->required()->check(CLI::IsMember({1, 2}));
  star_cmd->add_option("p", a1)->required();
  star_cmd->add_option("q", a2)->required();
  on(star_cmd, [&] {
    std::cout << to_string(star(star_index, parse_pwf(a1), parse_pwf(a2))) << "\n";
    return kHolds;
  });

  std::string universe_spec = "actions=3;names=4;arity=0;fusions={}", pole_spec = "done:8";
  auto* pole_laws = app.add_subcommand("pole-laws", "realizability laws over a finite universe");
  pole_laws->add_option("--universe", universe_spec);
  pole_laws->add_option("--pole", pole_spec);
  on(pole_laws, [&] {
    UniverseSpec spec = parse_universe_spec(universe_spec);
    Pole pole = parse_pole(pole_spec);
    auto members = enumerate_universe(spec);
    Universe u(members, pole);
    Report r = check_laws(u);
    r.notes.insert(r.notes.begin(), "universe: " + to_string(spec));
    r.add("pole regular on the universe", pole_regular_on(pole, members));
    return emit(s, std::move(r));
  });

  std::string level = "all";
  auto* algebra = app.add_subcommand("algebra-check", "check a finite model");
  algebra->add_option("model", a1)->required();
  algebra->add_option("--level", level)->check(CLI::IsMember({"cs", "ca", "cpa", "ccpa", "derived", "all"}));
  on(algebra, [&] {
    FinModel m = load_model(a1);
    std::vector<Report> rs;
    if (level == "cs" || level == "all") rs.push_back(check_cs(m));
    if (level == "ca" || level == "all") rs.push_back(check_ca(m));
    if (level == "cpa" || level == "all") rs.push_back(check_cpa(m));
    if (level == "ccpa" || level == "all") rs.push_back(check_ccpa(m));
    if (level == "derived" || level == "all") rs.push_back(check_derived_props(m));
    return emit_all(s, std::move(rs));
  });

  auto* mll = app.add_subcommand("mll", "multiplicative proofs");
  mll->require_subcommand(1);
  auto* mcheck = mll->add_subcommand("check", "print the conclusion of a proof file");
  mcheck->add_option("proof", a1)->required();
  on(mcheck, [&] {
    std::cout << to_string(check_proof(load_proof(a1))) << "\n";
    return kHolds;
  });
  std::string assign;
  auto* minterp = mll->add_subcommand("interpret", "value of a formula in a model");
  minterp->add_option("formula", a1)->required();
  minterp->add_option("model", a2)->required();
  minterp->add_option("--assign", assign, "X=a,Y=b");
  on(minterp, [&] {
    FinModel m = load_model(a2);
    Algebra alg(m);
    std::cout << m.name(interpret(parse_formula(a1), alg, parse_assignment(assign, m))) << "\n";
    return kHolds;
  });
  std::vector<std::string> models;
  auto* msound = mll->add_subcommand("sound", "every node interprets into the separator");
  msound->add_option("proof", a1)->required();
  msound->add_option("models", models)->required();
  on(msound, [&] {
    Proof p = load_proof(a1);
    std::vector<Report> rs;
    for (const auto& path : models) {
      Report r = check_soundness(p, load_model(path));
      r.notes.insert(r.notes.begin(), "model: " + path);
      rs.push_back(std::move(r));
    }
    return emit_all(s, std::move(rs));
  });
  bool eval = false;
  auto* mextract = mll->add_subcommand("extract", "realizer of a proof");
  mextract->add_option("proof", a1)->required();
  mextract->add_flag("--eval", eval, "also evaluate the realizer to a PWF");
  on(mextract, [&] {
    RealizerExpr e = extract_realizer(load_proof(a1));
    std::cout << to_string(e) << "\n";
    if (eval) std::cout << to_string(evaluate(e)) << "\n";
    return kHolds;
  });

  bool experimental = false;
  auto* hy = app.add_subcommand("hy-check", "candidate Honda-Yoshida encodings");
  hy->add_flag("--experimental-hy", experimental, "enable the candidate encodings");
  on(hy, [&] {
    if (!experimental) {
      std::cerr << "hy-check: the encodings are candidates; pass --experimental-hy to run them\n";
      return kInvalid;
    }
    return emit(s, check_hy_reductions(s.cfg.step_bound));
  });

  unsigned seed = 7;
  auto* laws = app.add_subcommand("laws", "run the law suites");
  laws->add_option("--seed", seed);
  laws->add_option("--universe", universe_spec);
  on(laws, [&] {
    LawSuiteOptions o;
    o.seed = seed;
    std::vector<Report> rs{check_fusion_laws(o), check_injection_corollaries(o), check_nu_laws(o),
                           check_adjoint_parallel(o), check_adequacy_lemmas(o)};
    auto members = enumerate_universe(parse_universe_spec(universe_spec));
    for (const char* pole : {"always", "done:8"}) {
      Universe u(members, parse_pole(pole));
      LawOptions lo;
      lo.seed = seed;
      rs.push_back(check_laws(u, lo));
    }
    rs.back().add("pole regular on the universe", pole_regular_on(parse_pole("done:8"), members));
    return emit_all(s, std::move(rs));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kHolds : kInvalid;
  }

  try {
    if (!s.config_file.empty()) s.cfg = load_config(s.config_file);
    for (const auto& kv : s.overrides) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::invalid_argument, "--set expects key=value");
      set_config_value(s.cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    apply(s.cfg);
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
