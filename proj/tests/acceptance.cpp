#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pwfcalc/calgebra.hpp"
#include "pwfcalc/error.hpp"
#include "pwfcalc/hy_encodings.hpp"
#include "pwfcalc/laws.hpp"
#include "pwfcalc/mll.hpp"
#include "pwfcalc/realizability.hpp"
#include "pwfcalc/reduction.hpp"

using namespace pwfcalc;

namespace {

const std::string kData = PWFCALC_DATA_DIR;

// Pinned parameters; every verdict below is exact.
constexpr std::size_t kOracleActions = 3;
constexpr Name kOracleNames = 4;
constexpr std::size_t kOracleNu = 1;
constexpr const char* kUniverse = "actions=2;names=3;arity=0;fusions={},{0~1}";
constexpr std::size_t kMinUniverse = 150;
constexpr std::size_t kMinCorpus = 20;

int failures = 0;

void verdict(int n, bool pass, const std::string& what) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
  return {};
}

void report_criterion(int n, const Report& r) {
  std::string why = first_failure(r);
  verdict(n, r.ok(), r.title + " [" + std::to_string(r.checks.size()) + " checks]" + (why.empty() ? "" : ": " + why));
}

template <class F>
void guarded(int n, const char* label, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    verdict(n, false, std::string(label) + ": " + e.what());
  }
}

std::vector<std::filesystem::path> files(const std::string& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(kData + "/" + dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

void criterion_oracle() {
  auto ps = oracle::enumerate(kOracleActions, kOracleNames, kOracleNu);
  oracle::Components comps;
  std::vector<int> ids;
  for (const auto& p : ps) ids.push_back(comps.add(oracle::from_process(p)));
  std::map<int, std::string> by_component;
  std::map<std::string, int> by_key;
  std::size_t disagreements = 0;
  std::string example;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    int c = comps.find(ids[i]);
    std::string k = canonical_key(ps[i]);
    auto [a, fa] = by_component.try_emplace(c, k);
    auto [b, fb] = by_key.try_emplace(k, c);
    if (a->second != k || b->second != c) {
      if (example.empty()) example = to_string(ps[i]);
      ++disagreements;
    }
  }
  verdict(6, disagreements == 0 && !ps.empty(),
          "structural congruence agrees with rewrite closure on " + std::to_string(ps.size()) +
              " processes (<=3 actions, names 0..3, <=1 restriction, " + std::to_string(by_key.size()) +
              " classes), " + std::to_string(disagreements) + " disagreements" +
              (example.empty() ? "" : ", first " + example));
}

void criterion_universe() {
  std::vector<Pwf> members = enumerate_universe(parse_universe_spec(kUniverse));
  bool ok = members.size() >= kMinUniverse;
  std::string why;
  for (const char* pole : {"always", "done:8"}) {
    Report r = check_laws(Universe(members, parse_pole(pole)));
    if (!r.ok()) {
      ok = false;
      why += std::string(" ") + pole + ": " + first_failure(r);
    }
  }
  bool regular = pole_regular_on(pole_done(8), members);
  if (!regular) why += " done:8 not regular";
  verdict(7, ok && regular,
          "realizability laws on " + std::to_string(members.size()) + " members under always and done:8, done:8 regular" + why);
}

void criterion_models() {
  FinModel b = load_model(kData + "/models/boolean.model");
  Algebra a(b);
  bool ok = check_cs(b).ok() && check_ca(b).ok() && check_cpa(b).ok();
  std::size_t units = 0;
  for (Elem s : a.combinators())
    if (s == a.unit()) ++units;
  ok = ok && units == a.combinators().size() && units == 5;
  Report broken = check_cs(load_model(kData + "/models/demorgan_broken.model"));
  const Check* dm = broken.find("de Morgan");
  bool rejected = !broken.ok() && dm && !dm->pass && !dm->witness.empty();
  verdict(8, ok && rejected,
          "boolean passes CS/CA/CPA with " + std::to_string(units) + "/5 combinators at unit; broken De Morgan " +
              (rejected ? "rejected, witness " + dm->witness : std::string("not rejected")));
}

void criterion_mll() {
  auto proofs = files("proofs");
  std::size_t checked = 0;
  std::vector<Proof> ps;
  for (const auto& f : proofs) {
    try {
      Proof p = load_proof(f.string());
      check_proof(p);
      ps.push_back(p);
      ++checked;
    } catch (const Error&) {
    }
  }
  std::size_t models = 0, unsound = 0;
  std::string why;
  for (const auto& f : files("models")) {
    FinModel m = load_model(f.string());
    if (!check_ca(m).ok()) continue;
    ++models;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (!check_soundness(ps[i], m).ok()) {
        ++unsound;
        if (why.empty()) why = ", unsound " + proofs[i].filename().string() + " in " + f.filename().string();
      }
  }
  bool ax = equal_pwf(evaluate(extract_realizer(Proof::ax(Formula::var("X")))), Pwf{Process::nil(), identity_I()});
  bool one = equal_pwf(evaluate(extract_realizer(Proof::one())), Pwf{Process::nil(), delta()});
  bool ok = checked == proofs.size() && checked >= kMinCorpus && models >= 2 && unsound == 0 && ax && one;
  verdict(9, ok,
          std::to_string(checked) + "/" + std::to_string(proofs.size()) + " proofs check, sound in " +
              std::to_string(models) + " CA models; extract(ax) = (1, I) " + (ax ? "yes" : "no") +
              ", extract(one) = (1, Delta) " + (one ? "yes" : "no") + why);
}

void criterion_hy() {
  Report r = check_hy_reductions();
  std::size_t findings = 0;
  for (const auto& l : hy_unencodable_labels()) {
    try {
      encode(l, {0, 1, 2});
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::not_representable &&
          std::string(e.what()).find(hy_non_encodability_finding()) != std::string::npos)
        ++findings;
    }
  }
  bool ok = r.ok() && r.checks.size() == 3 && findings == 3;
  verdict(10, ok,
          "M/K/F/D reductions " + std::to_string(r.checks.size()) + " checks " + (r.ok() ? "hold" : "fail: " + first_failure(r)) +
              "; Bl/Br/S findings " + std::to_string(findings) + "/3");
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  guarded(1, "fusion laws", [] { report_criterion(1, check_fusion_laws()); });
  guarded(2, "injection corollaries", [] { report_criterion(2, check_injection_corollaries()); });
  guarded(3, "restriction laws", [] { report_criterion(3, check_nu_laws()); });
  guarded(4, "adjoint parallel", [] { report_criterion(4, check_adjoint_parallel()); });
  guarded(5, "adequacy lemmas", [] { report_criterion(5, check_adequacy_lemmas()); });
  guarded(6, "congruence oracle", criterion_oracle);
  guarded(7, "realizability", criterion_universe);
  guarded(8, "finite models", criterion_models);
  guarded(9, "mll", criterion_mll);
  guarded(10, "hy encodings", criterion_hy);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d failed, %.1fs\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
