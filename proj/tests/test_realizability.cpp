#include <doctest.h>

#include <random>

#include "pwfcalc/realizability.hpp"

using namespace pwfcalc;

namespace {

Universe small(Pole pole) {
  UniverseSpec spec;
  spec.actions = 2;
  spec.names = 2;
  spec.arity = 0;
  spec.fusions = {parse_fusion("{}"), parse_fusion("{0~1}")};
  return Universe(enumerate_universe(spec), std::move(pole));
}

Bits random_subset(std::mt19937& rng, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = rng() % 4 == 0;
  return b;
}

}  // namespace

TEST_CASE("universe spec parsing") {
  UniverseSpec s = parse_universe_spec("actions=2;names=3;arity=1;fusions={},{0~1}");
  CHECK(s.actions == 2);
  CHECK(s.names == 3);
  CHECK(s.arity == 1);
  REQUIRE(s.fusions.size() == 2);
  CHECK(equal(s.fusions[1], parse_fusion("{0~1}")));
  CHECK(parse_universe_spec(to_string(s)).names == 3);
  CHECK_THROWS_AS(parse_universe_spec("colour=3"), Error);
}

TEST_CASE("enumeration has no duplicates and honours the guard") {
  UniverseSpec spec;
  spec.actions = 2;
  spec.names = 3;
  spec.arity = 1;
  spec.fusions = {parse_fusion("{}"), parse_fusion("{0~1}")};
  auto ms = enumerate_universe(spec);
  CHECK(ms.size() > 50);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) CHECK_FALSE(equal_pwf(ms[i], ms[j]));
}

TEST_CASE("orthogonality under the reduces-to-1 pole") {
  Pole pole = pole_done(4);
  std::vector<Pwf> ms{parse_pwf("<0!().1 ; {}>"), parse_pwf("<0?().1 ; {}>"), parse_pwf("<1?().1 ; {}>"), unit()};
  Universe u(ms, pole);
  Bits a = u.perp(std::vector<Pwf>{ms[0]});
  CHECK(a[1]);
  CHECK_FALSE(a[2]);
  CHECK_FALSE(a[3]);
  CHECK(u.perp(u.none()) == u.everything());
  CHECK(u.orthogonal(ms[0], ms[1]));
  CHECK_FALSE(u.orthogonal(ms[0], ms[2]));
}

TEST_CASE("closure operator laws") {
  Universe u = small(pole_done(8));
  std::mt19937 rng(43);
  for (int i = 0; i < 30; ++i) {
    Bits a = random_subset(rng, u.size()), b = set_union(a, random_subset(rng, u.size()));
    CHECK(subset(u.perp(b), u.perp(a)));
    CHECK(subset(a, u.biperp(a)));
    CHECK(u.perp(u.biperp(a)) == u.perp(a));
    CHECK(u.biperp(u.biperp(a)) == u.biperp(a));
    CHECK(u.is_behaviour(u.perp(a)));
    CHECK(subset(u.perp(u.everything()), u.perp(a)));
    CHECK(u.perp(set_union(a, b)) == set_intersection(u.perp(a), u.perp(b)));
  }
}

TEST_CASE("connectives") {
  Universe u = small(pole_done(8));
  std::size_t unit_index = 0;
  for (; unit_index < u.size(); ++unit_index)
    if (equal_pwf(u.members()[unit_index], unit())) break;
  REQUIRE(unit_index < u.size());
  CHECK(u.one()[unit_index]);
  std::mt19937 rng(47);
  for (int i = 0; i < 8; ++i) {
    Bits a = random_subset(rng, u.size()), b = random_subset(rng, u.size());
    CHECK(u.tensor(a, b) == u.tensor(u.biperp(a), u.biperp(b)));
    CHECK(u.is_behaviour(u.tensor(a, b)));
    CHECK(u.is_behaviour(u.lolli(a, b)));
  }
}

TEST_CASE("laws report under both poles") {
  for (Pole pole : {pole_always(), pole_done(8)}) {
    Universe u = small(pole);
    Report r = check_laws(u);
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK(r.checks.size() == 12);
    CHECK(r.notes.front().find("universe-relative") != std::string::npos);
  }
}

TEST_CASE("pole parsing") {
  CHECK(parse_pole("always").constant);
  CHECK(parse_pole("done:3")(unit()));
  CHECK_FALSE(parse_pole("done:3")(parse_pwf("<new 0. 0!().1 ; {}>")));
  CHECK_THROWS_AS(parse_pole("sometimes"), Error);
}
