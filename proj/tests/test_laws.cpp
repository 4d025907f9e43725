#include <doctest.h>

#include "pwfcalc/laws.hpp"

using namespace pwfcalc;

TEST_CASE("random generators respect the shape") {
  std::mt19937 rng(3);
  RandomShape s;
  for (int i = 0; i < 200; ++i) {
    Fusion e = random_fusion(rng, s.names, s.max_class, s.max_pairs);
    CHECK(e.families().empty());
    for (auto [x, y] : e.pairs()) {
      CHECK(x < s.names);
      CHECK(y < s.names);
    }
    for (Name x = 0; x < s.names; ++x) CHECK(class_of(e, x).size() <= s.max_class);
    Process p = random_process(rng, s);
    CHECK(action_count(p) <= s.max_actions);
    for (Name n : free_names(p)) CHECK(n < s.names);
  }
}

TEST_CASE("random generators are deterministic") {
  std::mt19937 a(5), b(5);
  RandomShape s;
  for (int i = 0; i < 20; ++i) {
    Pwf p = random_pwf(a, s), q = random_pwf(b, s);
    CHECK(to_string(p.proc) == to_string(q.proc));
    CHECK(equal(p.fus, q.fus));
  }
}

TEST_CASE("fusion laws") {
  Report r = check_fusion_laws();
  CHECK_MESSAGE(r.ok(), r.to_text());
}

TEST_CASE("injection corollaries") {
  Report r = check_injection_corollaries();
  CHECK_MESSAGE(r.ok(), r.to_text());
}

TEST_CASE("restriction laws") {
  Report r = check_nu_laws();
  CHECK_MESSAGE(r.ok(), r.to_text());
}

TEST_CASE("adjoint parallel composition") {
  Report r = check_adjoint_parallel();
  CHECK_MESSAGE(r.ok(), r.to_text());
}

TEST_CASE("adequacy lemmas") {
  Report r = check_adequacy_lemmas();
  CHECK_MESSAGE(r.ok(), r.to_text());
}

TEST_CASE("other seeds") {
  LawSuiteOptions o;
  o.seed = 19;
  o.fusion_samples = o.injection_samples = o.parallel_samples = 40;
  o.lemma_samples = 20;
  CHECK(check_fusion_laws(o).ok());
  CHECK(check_injection_corollaries(o).ok());
  CHECK(check_adjoint_parallel(o).ok());
  CHECK(check_adequacy_lemmas(o).ok());
}
