#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pwfcalc/laws.hpp"
#include "pwfcalc/process.hpp"

using namespace pwfcalc;

namespace {

Process P(const char* t) { return parse_process(t); }

}  // namespace

TEST_CASE("free names") {
  CHECK(free_names(P("1")).empty());
  CHECK(free_names(P("0!(2).2?().1")) == std::set<Name>{0});
  CHECK(free_names(P("new 0. 0!(1).1")).empty());
  CHECK(free_names(P("0!().1 | 3?(4).4!().1")) == std::set<Name>{0, 3});
}

TEST_CASE("substitution") {
  Substitution s = Substitution::single(0, 4);
  CHECK(struct_eq(substitute(P("1"), s), P("1")));
  CHECK(struct_eq(substitute(P("0!().1"), s), P("4!().1")));
  Process r = substitute(P("0?(1).1!().1"), Substitution::single(0, 1));
  CHECK(r.subject() == 1);
  CHECK(r.bound().size() == 1);
  CHECK(r.bound()[0] != 1);
  CHECK(r.body().subject() == r.bound()[0]);
  CHECK(free_names(r) == std::set<Name>{1});
}

TEST_CASE("substitution avoids capture under restriction") {
  Process r = substitute(P("new 1. 0!().1!().1"), Substitution::single(0, 1));
  CHECK(free_names(r) == std::set<Name>{1});
  CHECK_FALSE(struct_eq(r, P("new 1. 1!().1!().1")));
}

TEST_CASE("canonical form") {
  CHECK(canonical_key(P("1 | 0!().1")) == canonical_key(P("0!().1")));
  CHECK(canonical_key(P("new 5. 0!().1")) == canonical_key(P("0!().1")));
  CHECK(canonical_key(P("new 0.(0!().1 | 3?().1)")) == canonical_key(P("3?().1 | new 0. 0!().1")));
}

TEST_CASE("structural congruence") {
  Process a = P("0!().1"), b = P("1?(2).2!().1"), c = P("new 3. 3?().1");
  CHECK(struct_eq(Process::par(a, b), Process::par(b, a)));
  CHECK(struct_eq(Process::par(Process::par(a, b), c), Process::par(a, Process::par(b, c))));
  CHECK_FALSE(struct_eq(P("0!().1"), P("0?().1")));
  CHECK(struct_eq(P("new 0 1. (0!().1 | 1?().1)"), P("new 1 0. (0!().1 | 1?().1)")));
  CHECK_FALSE(struct_eq(P("new 0. (0!().1 | 0?().1)"), P("new 0. 0!().1 | new 0. 0?().1")));
}

TEST_CASE("canonical is idempotent and congruent") {
  std::mt19937 rng(13);
  RandomShape shape;
  shape.max_actions = 3;
  for (int i = 0; i < 200; ++i) {
    Process p = random_process(rng, shape), q = random_process(rng, shape);
    CHECK(canonical_key(canonical(p)) == canonical_key(p));
    Process p2 = Process::par(Process::nil(), p);
    CHECK(struct_eq(Process::par(p2, q), Process::par(q, p)));
    CHECK(struct_eq(Process::act(0, Polarity::up, {}, p2), Process::act(0, Polarity::up, {}, p)));
    CHECK(struct_eq(Process::nu(1, p2), Process::nu(1, p)));
  }
}

TEST_CASE("printer round-trips up to congruence") {
  std::mt19937 rng(17);
  RandomShape shape;
  shape.max_actions = 3;
  for (int i = 0; i < 200; ++i) {
    Process p = random_process(rng, shape);
    CHECK(struct_eq(parse_process(to_string(p)), p));
  }
}

TEST_CASE("oracle agrees on two-prefix processes") {
  auto ps = oracle::enumerate(2, 3, 1);
  oracle::Components comps;
  std::vector<int> ids;
  for (const auto& p : ps) ids.push_back(comps.add(oracle::from_process(p)));
  std::map<int, std::string> by_component;
  std::map<std::string, int> by_key;
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    int c = comps.find(ids[i]);
    std::string k = canonical_key(ps[i]);
    auto [a, fa] = by_component.try_emplace(c, k);
    auto [b, fb] = by_key.try_emplace(k, c);
    if (a->second != k || b->second != c) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("bounded oracle closure") {
  oracle::Closure c(100);
  auto from = oracle::from_process(P("new 0.(0!().1 | 3?().1)"));
  auto reach = c.reachable(from, oracle::size(from));
  CHECK(reach.count(oracle::key(oracle::from_process(P("3?().1 | new 0. 0!().1")))));
  CHECK_FALSE(reach.count(oracle::key(oracle::from_process(P("3?().1 | 0!().1")))));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(P("0!("), Error);
  CHECK_THROWS_AS(P("| 1"), Error);
  CHECK_THROWS_AS(P("0!(1 1).1"), Error);
}
