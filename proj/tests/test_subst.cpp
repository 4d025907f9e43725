#include <doctest.h>

#include "pwfcalc/fusion.hpp"
#include "pwfcalc/subst.hpp"

using namespace pwfcalc;

namespace {

bool agree_on(const Substitution& a, const Substitution& b, Name bound) {
  for (Name x = 0; x < bound; ++x)
    if (a(x) != b(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("apply") {
  CHECK(Substitution::identity()(5) == 5);
  CHECK(Substitution::single(0, 3)(0) == 3);
  CHECK(Substitution::remap(Word{1}, Word{1, 2})(3) == 6);
  CHECK(Substitution::remap(Word{1}, Word{1, 2})(4) == 4);
}

TEST_CASE("finite entries take precedence over remaps") {
  Substitution s = parse_substitution("{3:=0 ; 1 -> 2}");
  CHECK(s(3) == 0);
  CHECK(s(5) == 4);
}

TEST_CASE("compose applies right to left") {
  Substitution s = Substitution::single(1, 2), t = Substitution::single(0, 1);
  CHECK(compose(s, t)(0) == 2);
  CHECK(equal(compose(s, Substitution::identity()), s));
  Substitution chained = compose(Substitution::remap(Word{1, 2}, Word{2, 2}), Substitution::remap(Word{1}, Word{1, 2}));
  Substitution direct = Substitution::remap(Word{1}, Word{2, 2});
  for (Name x = 1; x < 128; x += 2) CHECK(chained(x) == direct(x));
  // Names already in N^1.2 are moved by the outer remap alone.
  CHECK(chained(tag(3, Word{1, 2})) == tag(3, Word{2, 2}));
  CHECK(direct(tag(3, Word{1, 2})) == tag(3, Word{1, 2}));
}

TEST_CASE("compose agrees pointwise on mixed substitutions") {
  std::vector<Substitution> ss{parse_substitution("{0:=3, 1:=2}"), parse_substitution("{; 1 -> 2}"),
                               parse_substitution("{5:=1 ; 2 -> 1.2}"), parse_substitution("{; 1.1 -> 2.2, 2.1 -> 1.2}")};
  for (const auto& a : ss)
    for (const auto& b : ss) {
      Substitution c = compose(a, b);
      for (Name x = 0; x < 200; ++x) CHECK(c(x) == a(b(x)));
    }
}

TEST_CASE("restrict_away") {
  Substitution s = Substitution::single(0, 3);
  CHECK(equal(restrict_away(s, NameSet{}), s));
  CHECK(equal(restrict_away(s, NameSet::of({0})), Substitution::identity()));
  CHECK(agree_on(restrict_away(Substitution::remap(Word{1}, Word{2}), NameSet::residue(Word{1})),
                 Substitution::identity(), 200));
}

TEST_CASE("equivalent_via") {
  Substitution s = Substitution::single(1, 0), t = Substitution::single(0, 1);
  CHECK(equivalent_via(s, s, {}));
  CHECK(equivalent_via(s, t, {{0, 1}, {1, 0}}));
  CHECK_FALSE(equivalent_via(Substitution::single(0, 1), Substitution::single(0, 2), {}));
  CHECK_THROWS(equivalent_via(s, t, {{0, 1}, {1, 1}}));
}

TEST_CASE("nu ordering lemma over small fusions") {
  std::vector<Fusion> es{parse_fusion("{}"), parse_fusion("{0~1}"), parse_fusion("{0~2}"), parse_fusion("{1~2, 3~4}"),
                         parse_fusion("{0~1~2}"), parse_fusion("{0~3, 2~4}")};
  for (const auto& e : es)
    for (Name x = 0; x < 5; ++x)
      for (Name y = x + 1; y < 5; ++y) {
        Substitution first = compose(Substitution::single(x, second_rep(remove(e, NameSet::of({y})), x)),
                                     Substitution::single(y, second_rep(e, y)));
        Substitution primed = compose(Substitution::single(y, second_rep(remove(e, NameSet::of({x})), y)),
                                      Substitution::single(x, second_rep(e, x)));
        if (class_of(e, x) == std::set<Name>{x, y}) {
          CHECK(agree_on(first, Substitution::single(y, x), 16));
          CHECK(agree_on(primed, Substitution::single(x, y), 16));
          CHECK(equivalent_via(first, primed, {{x, y}, {y, x}}));
        } else if (!related(e, x, y)) {
          CHECK(agree_on(first, primed, 16));
        }
      }
}

TEST_CASE("literal round-trip") {
  for (const char* t : {"{0:=3, 1:=2 ; 1 -> 1.2}", "{}", "{; 1.1 -> 2.2}"}) {
    Substitution s = parse_substitution(t);
    CHECK(equal(parse_substitution(to_string(s)), s));
  }
}
