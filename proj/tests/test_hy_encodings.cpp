#include <doctest.h>

#include <string>

#include "pwfcalc/error.hpp"
#include "pwfcalc/hy_encodings.hpp"

using namespace pwfcalc;

namespace {

ErrorKind kind_of(const std::string& label, const std::vector<Name>& params) {
  try {
    encode(label, params);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << label);
  return ErrorKind::parse;
}

}  // namespace

TEST_CASE("message encoding") {
  HyCandidate m = encode("M", {0, 1});
  CHECK(m.label == "M");
  CHECK(m.body.fus.is_delta());
  CHECK(equal_pwf(m.body, parse_pwf("<0!(1) ; {}>")));
}

TEST_CASE("receivers bind fresh names") {
  HyCandidate k = encode("K", {0});
  CHECK(equal_pwf(k.body, parse_pwf("<0?(1) ; {}>")));
  HyCandidate f = encode("F", {0, 1});
  CHECK(equal_pwf(f.body, parse_pwf("<0?(2).1!(3) ; {}>")));
  HyCandidate d = encode("D", {0, 1, 2});
  CHECK(equal_pwf(d.body, parse_pwf("<0?(3).(1!(4) | 2!(5)) ; {}>")));
  CHECK(free_names(d.body.proc) == std::set<Name>{0, 1, 2});
}

TEST_CASE("binders avoid every parameter") {
  HyCandidate f = encode("F", {7, 3});
  for (Name n : all_names(f.body.proc)) CHECK((n == 7 || n == 3 || n > 7));
}

TEST_CASE("labels without an encoding") {
  CHECK(hy_encodable_labels() == std::vector<std::string>{"M", "K", "F", "D"});
  CHECK(hy_unencodable_labels() == std::vector<std::string>{"Bl", "Br", "S"});
  CHECK_FALSE(hy_non_encodability_finding().empty());
  for (const auto& l : hy_unencodable_labels()) {
    CHECK(kind_of(l, {0, 1, 2}) == ErrorKind::not_representable);
    try {
      encode(l, {0, 1, 2});
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find(hy_non_encodability_finding()) != std::string::npos);
    }
  }
}

TEST_CASE("bad labels and arities") {
  CHECK(kind_of("Q", {0}) == ErrorKind::invalid_argument);
  CHECK(kind_of("M", {0}) == ErrorKind::invalid_argument);
  CHECK(kind_of("D", {0, 1}) == ErrorKind::invalid_argument);
}

TEST_CASE("reduction checks") {
  Report r = check_hy_reductions();
  CHECK_MESSAGE(r.ok(), r.to_text());
  CHECK(r.find("K(a) | M(a,x) reduces to 1") != nullptr);
  CHECK(r.find("F(a,b) | M(a,x) reduces to M(b,.)") != nullptr);
  CHECK(r.find("D(a,b,c) | M(a,x) reduces to M(b,.) | M(c,.)") != nullptr);
}
