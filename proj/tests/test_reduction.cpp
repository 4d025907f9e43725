#include <doctest.h>

#include <random>

#include "pwfcalc/laws.hpp"
#include "pwfcalc/realizability.hpp"
#include "pwfcalc/reduction.hpp"

using namespace pwfcalc;

namespace {

Pwf W(const char* t) { return parse_pwf(t); }

}  // namespace

TEST_CASE("one step") {
  auto r = step(W("<0!().1 | 0?().1 ; {}>"));
  REQUIRE(r.size() == 1);
  CHECK(equal_pwf(r[0], unit()));

  auto fused = step(W("<0!(2).2!().1 | 1?(2).2?().1 ; {0~1}>"));
  REQUIRE(fused.size() == 1);
  CHECK(equal_pwf(fused[0], W("<new 2.(2!().1|2?().1) ; {0~1}>")));

  CHECK(step(W("<0!().1 | 1?().1 ; {}>")).empty());
  CHECK(step(W("<0!().1 | 0!().1 ; {}>")).empty());
  CHECK(step(W("<0!(1).1 | 0?().1 ; {}>")).empty());
}

TEST_CASE("steps under restriction and inside parallel context") {
  auto r = step(W("<new 0.(0!().1 | 0?().3!().1) | 5?().1 ; {}>"));
  REQUIRE(r.size() == 1);
  CHECK(equal_pwf(r[0], W("<3!().1 | 5?().1 ; {}>")));
  CHECK(step(W("<new 0. 0!().1 | new 0. 0?().1 ; {}>")).empty());
  CHECK(step(W("<new 0. 0!().1 | 1?().1 ; {0~1}>")).empty());
}

TEST_CASE("all redexes are reported") {
  auto r = step(W("<0!().1 | 0?().1 | 0?().2!().1 ; {}>"));
  CHECK(r.size() == 2);
}

TEST_CASE("reduces_within") {
  Pwf p = W("<0!().1 | 0?().1 ; {}>");
  CHECK(reduces_within(p, p, 0));
  CHECK(reduces_within(p, unit(), 1));
  CHECK_FALSE(reduces_within(W("<0!().1 ; {}>"), unit(), 5));
  Pwf two = W("<0!().1!().1 | 0?().1?().1 ; {}>");
  CHECK_FALSE(reduces_within(two, unit(), 1));
  CHECK(reduces_within(two, unit(), 2));
}

TEST_CASE("reduction keeps the fusion and respects equivalence") {
  std::mt19937 rng(41);
  RandomShape s;
  s.max_actions = 4;
  s.names = 3;
  std::size_t fired = 0;
  for (int i = 0; i < 200; ++i) {
    Pwf p = random_pwf(rng, s);
    auto r = step(p);
    fired += r.size();
    for (const auto& q : r) CHECK(equal(q.fus, p.fus));
    Pwf same{Process::par(Process::nil(), p.proc), p.fus};
    auto r2 = step(same);
    REQUIRE(r2.size() == r.size());
    for (std::size_t k = 0; k < r.size(); ++k) CHECK(equal_pwf(r[k], r2[k]));
  }
  CHECK(fired > 0);
}

TEST_CASE("regular poles") {
  UniverseSpec spec;
  spec.actions = 2;
  spec.names = 2;
  auto members = enumerate_universe(spec);
  CHECK(pole_regular_on(pole_always(), members));
  CHECK(pole_regular_on(pole_done(8), members));
  CHECK_FALSE(pole_regular_on(pole_exactly_unit(), members));
}
