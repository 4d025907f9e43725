#include <doctest.h>

#include <string>

#include "pwfcalc/calgebra.hpp"

using namespace pwfcalc;

namespace {

const std::string kDir = PWFCALC_DATA_DIR "/models/";

FinModel boolean() { return load_model(kDir + "boolean.model"); }
FinModel diamond() { return load_model(kDir + "diamond.model"); }

const char* kBooleanNoPar = R"(
[carrier]
0 1
[leq]
0 <= 1
[tensor]
0 0 -> 0
0 1 -> 0
1 0 -> 0
1 1 -> 1
[perp]
0 -> 1
1 -> 0
[unit]
1
[separator]
1
)";

}  // namespace

TEST_CASE("boolean connectives") {
  FinModel m = boolean();
  Algebra a(m);
  Elem z = m.index("0"), o = m.index("1");
  CHECK(a.bottom() == z);
  CHECK(a.top() == o);
  for (Elem x : {z, o})
    for (Elem y : {z, o}) CHECK(a.lolli(x, y) == ((x == z || y == o) ? o : z));
}

TEST_CASE("application is adjoint to lolli") {
  for (const FinModel& m : {boolean(), diamond()}) {
    Algebra a(m);
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y)
        for (Elem c = 0; c < a.size(); ++c) CHECK(a.leq(a.app(x, y), c) == a.leq(x, a.lolli(y, c)));
  }
}

TEST_CASE("parallel is adjoint to the triangle") {
  for (const FinModel& m : {boolean(), diamond()}) {
    Algebra a(m);
    REQUIRE(a.has_par());
    for (Elem x = 0; x < a.size(); ++x)
      for (Elem y = 0; y < a.size(); ++y)
        for (Elem c = 0; c < a.size(); ++c) CHECK(a.leq(a.par(x, y), c) == a.leq(x, a.tri(y, c)));
  }
}

TEST_CASE("boolean model passes CS, CA and CPA with unit combinators") {
  FinModel m = boolean();
  CHECK_MESSAGE(check_cs(m).ok(), check_cs(m).to_text());
  CHECK_MESSAGE(check_ca(m).ok(), check_ca(m).to_text());
  CHECK_MESSAGE(check_cpa(m).ok(), check_cpa(m).to_text());
  CHECK_MESSAGE(check_derived_props(m).ok(), check_derived_props(m).to_text());
  Algebra a(m);
  for (Elem s : a.combinators()) CHECK(s == m.index("1"));
  CHECK(a.combinators().size() == 5);
}

TEST_CASE("boolean model fails M injectivity") {
  Report r = check_ccpa(boolean());
  CHECK_FALSE(r.ok());
  const Check* c = r.find("M injective on the window");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK_FALSE(c->witness.empty());
}

TEST_CASE("diamond model") {
  FinModel m = diamond();
  CHECK(check_cs(m).ok());
  CHECK(check_ca(m).ok());
  CHECK(check_cpa(m).ok());
  CHECK(check_derived_props(m).ok());
}

TEST_CASE("broken De Morgan entry is rejected with a witness") {
  Report r = check_cs(load_model(kDir + "demorgan_broken.model"));
  CHECK_FALSE(r.ok());
  const Check* c = r.find("de Morgan");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK_FALSE(c->witness.empty());
}

TEST_CASE("separator candidates") {
  std::string text = kBooleanNoPar;
  FinModel full = parse_model(text.substr(0, text.rfind("[separator]")) + "[separator]\n0 1\n");
  CHECK(check_ca(full).ok());
  FinModel zero = parse_model(text.substr(0, text.rfind("[separator]")) + "[separator]\n0\n");
  Report r = check_ca(zero);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("unit: 1 in separator")->pass);
}

TEST_CASE("models without parallel composition") {
  FinModel m = parse_model(kBooleanNoPar);
  CHECK(check_ca(m).ok());
  CHECK_FALSE(check_cpa(m).ok());
  CHECK_FALSE(hy_combinators(Algebra(m)).has_value());
}

TEST_CASE("composition of realizers") {
  FinModel m = boolean();
  Elem o = m.index("1"), z = m.index("0");
  HomResult r = hom_compose(m, o, o, z, o, o);
  CHECK(r.value == o);
  CHECK(r.in_hom);
  CHECK_THROWS(hom_compose(m, o, z, z, o, o));
}

TEST_CASE("join table and order agree") {
  FinModel m = diamond();
  REQUIRE(m.join_table.has_value());
  Algebra a(m);
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      CHECK(a.join(x, y) == (*m.join_table)[x][y]);
      CHECK(a.leq(a.meet(x, y), x));
      CHECK(a.leq(a.meet(x, y), y));
    }
}

TEST_CASE("model parse errors") {
  CHECK_THROWS(parse_model("[carrier]\n0 1\n[tensor]\n0 0 -> 0\n"));
  CHECK_THROWS(parse_model("[carrier]\n0 1\n[leq]\n0 <= 2\n"));
  CHECK_THROWS(Algebra(parse_model(R"(
[carrier]
a b c
[leq]
a <= c
b <= c
[tensor]
a a -> a
a b -> a
a c -> a
b a -> a
b b -> a
b c -> a
c a -> a
c b -> a
c c -> a
[perp]
a -> c
b -> b
c -> a
[unit]
c
[separator]
c
)")));
}
