#include <doctest.h>

#include <random>

#include "pwfcalc/fusion.hpp"
#include "pwfcalc/laws.hpp"

using namespace pwfcalc;

namespace {

bool same_classes(const Fusion& e, const Fusion& f, Name bound = 256) {
  for (Name x = 0; x < bound; ++x)
    if (class_of(e, x) != class_of(f, x)) return false;
  return true;
}

Fusion F(const char* t) { return parse_fusion(t); }

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(delta(), 1024));
  CHECK(validate(phi(), 1024));
  Fusion chain;
  chain.add_family(Word{}, Word{2});
  CHECK_FALSE(validate(chain, 1024));
  CHECK_THROWS_AS(F("{[eps <-> 2]}"), Error);
}

TEST_CASE("class_of and related") {
  CHECK(class_of(delta(), 7) == std::set<Name>{7});
  CHECK(class_of(identity_I(), 5) == std::set<Name>{4, 5});
  CHECK(class_of(phi(), 1) == std::set<Name>{0, 1, 2});
  CHECK(related(delta(), 3, 3));
  CHECK(related(phi(), 3, 4));
  CHECK_FALSE(related(identity_I(), 1, 2));
  CHECK(class_of(F("{[1 <-> 1.2],[1.2 <-> 2.2]}"), 1) == std::set<Name>{0, 1, 2});
}

TEST_CASE("join") {
  Fusion e = F("{0~1, 4~7}");
  CHECK(same_classes(join(e, delta()), e));
  CHECK(same_classes(join(psi(), relabel(identity_I(), Word{2})), phi()));
  CHECK(equal(join(psi(), relabel(identity_I(), Word{2})), phi()));
  CHECK(related(join(F("{0~1}"), F("{1~2}")), 0, 2));
}

TEST_CASE("restrict and remove") {
  Fusion e = F("{0~1~2}");
  CHECK(equal(restrict(e, NameSet::all()), e));
  CHECK(equal(restrict(e, NameSet::of({0, 2})), F("{0~2}")));
  CHECK(equal(restrict(identity_I(), NameSet::residue(Word{2})), delta()));
  CHECK(equal(remove(e, NameSet{}), e));
  CHECK(equal(remove(F("{1~3, 5~4}"), NameSet::residue(Word{1})), delta()));
}

TEST_CASE("representatives") {
  CHECK(min_rep(delta(), 9) == 9);
  CHECK(min_rep(F("{0~1~2}"), 2) == 0);
  CHECK(min_rep(phi(), 3) == 3);
  CHECK(second_rep(delta(), 5) == 5);
  CHECK(second_rep(F("{0~1}"), 0) == 1);
  CHECK(second_rep(phi(), 4) == 3);
}

TEST_CASE("map_fusion") {
  Fusion e = F("{0~1, 2~5}");
  CHECK(equal(map_fusion(e, Substitution::identity()), e));
  CHECK(equal(map_fusion(F("{0~1}"), Substitution::single(0, 5)), F("{1~5}")));
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Fusion f = random_fusion(rng, 8, 3, 3);
    CHECK(same_classes(map_fusion(relabel(f, Word{1}), Substitution::remap(Word{1}, Word{1, 2})),
                       relabel(f, Word{1, 2})));
  }
}

TEST_CASE("equal and the named combinators") {
  CHECK(equal(delta(), delta()));
  CHECK_FALSE(equal(identity_I(), psi()));
  CHECK(equal(sigma_tau(Substitution::remap(Word{1}, Word{2})), identity_I()));
  CHECK_FALSE(equal(F("{0~1}"), F("{0~2}")));
}

TEST_CASE("subsumption") {
  CHECK(subsumed_exact(F("{0~1}"), F("{0~1~2}")) == true);
  CHECK(subsumed_exact(F("{0~3}"), F("{0~1~2}")) == false);
  CHECK(subsumed_exact(psi(), phi()) == true);
  CHECK(subsumed_exact(phi(), psi()) == false);
}

TEST_CASE("semi-distributivity fails") {
  Fusion e = F("{0~1}"), f = F("{1~2}"), g = F("{0~2}");
  CHECK(related(meet(join(e, f), g), 0, 2));
  CHECK(equal(join(meet(e, g), meet(f, g)), delta()));
}

TEST_CASE("remove twice is remove of the union") {
  std::mt19937 rng(9);
  std::vector<NameSet> sets{NameSet::of({0, 3}), NameSet::residue(Word{1}), NameSet::residue(Word{2, 1}),
                            NameSet::of({1, 2, 6})};
  for (int i = 0; i < 50; ++i) {
    Fusion e = join(random_fusion(rng, 10, 4, 5), i % 3 == 0 ? identity_I() : delta());
    for (const auto& x : sets)
      for (const auto& y : sets) CHECK(equal(remove(remove(e, x), y), remove(e, x.unite(y))));
  }
}

TEST_CASE("printer round-trips bit-exactly") {
  for (const char* t : {"{}", "{0~1~2}", "{[1 <-> 2]}", "{0~3, 1~2, [1 <-> 1.2], [1.2 <-> 2.2]}"}) {
    std::string once = to_string(F(t));
    CHECK(to_string(F(once.c_str())) == once);
  }
  CHECK(to_string(F("{5~4, 1~3}")) == "{1~3, 4~5}");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(F("{0~}"), Error);
  CHECK_THROWS_AS(F("{[1 <-> ]}"), Error);
}
