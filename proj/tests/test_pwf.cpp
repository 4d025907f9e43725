#include <doctest.h>

#include <random>

#include "pwfcalc/config.hpp"
#include "pwfcalc/laws.hpp"
#include "pwfcalc/pwf.hpp"

using namespace pwfcalc;

namespace {

Pwf W(const char* t) { return parse_pwf(t); }

}  // namespace

TEST_CASE("free names of a PWF") {
  CHECK_FALSE(fn_contains(W("<1 ; {}>"), 0));
  CHECK(fn_contains(W("<0!().1 ; {0~5}>"), 5));
  CHECK(fn_contains(Pwf{Process::nil(), identity_I()}, 7));
  CHECK(fn_finite_part(W("<0!().1 ; {0~5, 2~3}>")) == std::set<Name>{0, 2, 3, 5});
}

TEST_CASE("equivalence") {
  Pwf p = W("<0!().1 | 1?().1 ; {2~3}>");
  CHECK(equal_pwf(p, p));
  CHECK(equal_pwf(W("<0!().1 ; {0~1}>"), W("<1!().1 ; {0~1}>")));
  CHECK_FALSE(equal_pwf(W("<0!().1 ; {}>"), Pwf{parse_process("0!().1"), identity_I()}));
  CHECK(equal_pwf(W("<1|0!().1 ; {}>"), W("<0!().1 ; {}>")));
}

TEST_CASE("constructors") {
  Pwf p = W("<0!().1 ; {0~1}>");
  CHECK(equal_pwf(par(p, unit()), p));
  CHECK(equal_pwf(par(W("<0!().1 ; {}>"), W("<1 ; {0~1}>")), p));
  CHECK(equal_pwf(par(W("<0!().1 ; {0~1}>"), W("<2?().1 ; {2~3}>")), W("<0!().1 | 2?().1 ; {0~1, 2~3}>")));
  CHECK(equal_pwf(prefix(0, Polarity::up, {1}, unit()), W("<0!(1).1 ; {}>")));
  CHECK_THROWS_AS(prefix(0, Polarity::up, {1}, W("<1 ; {1~2}>")), Error);
  CHECK(equal_pwf(prefix(0, Polarity::down, {}, p), W("<0?().0!().1 ; {0~1}>")));
}

TEST_CASE("restriction of one name") {
  CHECK(equal_pwf(nu_name(0, W("<0!().1 ; {}>")), W("<new 0. 0!().1 ; {}>")));
  CHECK(equal_pwf(nu_name(0, W("<0!().1 ; {0~1}>")), W("<1!().1 ; {}>")));
  CHECK(equal_pwf(nu_name(3, W("<0!().1 ; {}>")), W("<0!().1 ; {}>")));
}

TEST_CASE("restriction of a finite set") {
  Pwf p = W("<0!().1?().2!().1 ; {1~2}>");
  CHECK(equal_pwf(nu_finite({}, p), p));
  CHECK(equal_pwf(nu_finite({0, 1}, p), nu_name(1, nu_name(0, p))));
  CHECK(equal_pwf(nu_finite({0, 1}, p), nu_name(0, nu_name(1, p))));
}

TEST_CASE("hereditary closure") {
  auto hc = hereditary_closure(parse_nameset("@1"), W("<1!() ; {1~3, 5~4}>"));
  CHECK(hc.names == std::set<Name>{1, 3});
  CHECK(hc.sigma(1) == 3);
  CHECK(hc.sigma(3) == 3);
  auto plain = hereditary_closure(NameSet::of({0, 2}), W("<0!().1 | 1!().2?().1 ; {}>"));
  CHECK(plain.names == std::set<Name>{0, 2});
  CHECK(plain.sigma(0) == 0);
  CHECK(plain.sigma(2) == 2);
}

TEST_CASE("closure substitution leaves the set where it can") {
  Pwf p = W("<1!().3?().1 ; {1~2, 3~4~5}>");
  NameSet x = parse_nameset("@1");
  auto hc = hereditary_closure(x, p);
  for (Name n : hc.names) CHECK_FALSE(x.member(hc.sigma(n)));
  CHECK(hc.sigma(1) == 2);
}

TEST_CASE("restriction of a set") {
  CHECK(to_string(nu_set(parse_nameset("@1"), W("<1!() ; {1~3, 5~4}>"))) == "<new 3. 3!() ; {}>");
  Pwf p = W("<0!().1 ; {0~1}>");
  CHECK(equal_pwf(nu_set(NameSet{}, p), p));
  CHECK(equal_pwf(nu_set(NameSet::all(), W("<0!().1|0?().1 ; {}>")), W("<new 0.(0!().1|0?().1) ; {}>")));
}

TEST_CASE("restriction of everything") {
  CHECK(equal_pwf(nu_all(unit()), unit()));
  CHECK(equal_pwf(nu_all(W("<0!().1 ; {0~1}>")), W("<new 1. 1!().1 ; {}>")));
  std::mt19937 rng(21);
  RandomShape s;
  for (int i = 0; i < 50; ++i) {
    Pwf p = random_pwf(rng, s), q = random_pwf(rng, s);
    Pwf closed = nu_all(p);
    CHECK(free_names(closed.proc).empty());
    CHECK(closed.fus.is_delta());
    Pwf lhs = nu_all({Process::par(relabel(p, 1).proc, relabel(q, 2).proc),
                      join(join(relabel(p, 1).fus, relabel(q, 2).fus), identity_I())});
    CHECK(equal_pwf(lhs, nu_all(par(p, q))));
  }
}

TEST_CASE("relabelling") {
  CHECK(equal_pwf(relabel(W("<0!().1 ; {}>"), 1), W("<1!().1 ; {}>")));
  CHECK(equal(relabel(Pwf{Process::nil(), identity_I()}, 2).fus, parse_fusion("{[1.2 <-> 2.2]}")));
  std::mt19937 rng(23);
  RandomShape s;
  for (int i = 0; i < 50; ++i) {
    Pwf p = random_pwf(rng, s);
    CHECK(equal_pwf(unrelabel(relabel(p, 2), 2), p));
    CHECK(equal_pwf(unrelabel(relabel(p, 1), 1), p));
  }
  CHECK_THROWS_AS(unrelabel(W("<1!().1 ; {}>"), 2), Error);
}

TEST_CASE("bullet") {
  CHECK(equal_pwf(bullet(unit(), unit()), unit()));
  CHECK(equal_pwf(bullet(W("<0!().1 ; {}>"), W("<0?().1 ; {}>")), W("<1!().1|0?().1 ; {}>")));
}

TEST_CASE("adjoint application") {
  CHECK(equal_pwf(star(1, unit(), unit()), unit()));
  std::mt19937 rng(29);
  RandomShape s;
  for (int i = 0; i < 50; ++i) {
    Pwf p = random_pwf(rng, s), q = random_pwf(rng, s);
    CHECK(equal_pwf(star(1, phi_pwf(), p), Pwf{relabel(p, 1).proc, join(relabel(p, 1).fus, identity_I())}));
    CHECK(equal_pwf(star(1, star(1, phi_pwf(), p), q), par(p, q)));
  }
}

TEST_CASE("star binds the relabelled side") {
  CHECK(equal_pwf(star(1, W("<1!().1 ; {}>"), unit()), W("<new 0. 0!().1 ; {}>")));
  CHECK(equal_pwf(star(1, W("<2!().1 ; {}>"), unit()), W("<1!().1 ; {}>")));
}

TEST_CASE("catalog") {
  CHECK(equal(catalog_entry("ID").fusion(), identity_I()));
  const auto& assoc = catalog_entry("ASSOC_R");
  auto has = [](const RealizerTau& r, Word from, Word to) {
    for (const auto& [u, v] : r.tau.word_remaps())
      if (u == from && v == to) return true;
    return false;
  };
  CHECK(has(assoc, Word{1, 1}, Word{1, 1, 2}));
  CHECK(has(assoc, Word{1, 2, 1}, Word{2, 1, 2}));
  CHECK(has(assoc, Word{2, 2, 1}, Word{2, 2}));
  CHECK(has(catalog_entry("COMM"), Word{1, 1}, Word{2, 2}));
  CHECK(has(catalog_entry("COMM"), Word{2, 1}, Word{1, 2}));
  CHECK(realizer_catalog().size() == 11);
  CHECK_THROWS_AS(catalog_entry("NOPE"), Error);
}

TEST_CASE("lemma identities on random components") {
  std::mt19937 rng(31);
  RandomShape s;
  for (const auto& r : realizer_catalog())
    for (int i = 0; i < 10; ++i) {
      std::vector<Pwf> comps;
      for (std::size_t k = 0; k < r.layout.size(); ++k) comps.push_back(random_pwf(rng, s));
      LemmaCheck c = check_lemma(r, comps);
      CHECK_MESSAGE(c.restriction, r.label);
      if (c.closure_applicable) CHECK_MESSAGE(c.closure, r.label);
    }
}

TEST_CASE("finite restriction modes") {
  Config saved;
  Pwf p = W("<0!().1?() ; {0~1~2, 3~4}>");
  Config c;
  c.nu_closure = NuClosure::class_closure;
  apply(c);
  CHECK(equal_pwf(nu(NameSet::of({0, 3}), p), W("<new 2. 2!().2?() ; {}>")));
  apply(saved);
  Pwf literal = nu(NameSet::of({0, 3}), p);
  CHECK_FALSE(equal_pwf(literal, W("<new 2. 2!().2?() ; {}>")));
  CHECK(equal_pwf(literal, nu_name(3, nu_name(0, p))));
}

TEST_CASE("restrictions commute") {
  std::mt19937 rng(37);
  RandomShape s;
  for (int i = 0; i < 100; ++i) {
    Pwf p = random_pwf(rng, s);
    for (Name x = 0; x < 4; ++x)
      for (Name y = 0; y < 4; ++y) CHECK(equal_pwf(nu_name(x, nu_name(y, p)), nu_name(y, nu_name(x, p))));
  }
}

TEST_CASE("printer round-trips") {
  for (const char* t : {"<1 ; {}>", "<0!(1).1!().1 | new 2. 2?().1 ; {0~3}>", "<1 ; {[1 <-> 2]}>"}) {
    Pwf p = W(t);
    CHECK(equal_pwf(W(to_string(p).c_str()), p));
  }
}
