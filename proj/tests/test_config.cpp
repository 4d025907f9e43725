#include <doctest.h>

#include "pwfcalc/config.hpp"
#include "pwfcalc/error.hpp"

using namespace pwfcalc;

TEST_CASE("defaults") {
  Config c;
  CHECK(c.class_budget == 1024);
  CHECK(c.sample_bound == 256);
  CHECK(c.nu_closure == NuClosure::literal);
  CHECK(c.nu_seed == NuSeed::fn);
  CHECK(c.step_bound == 8);
  CHECK(to_string(c) == "class_budget=1024 sample_bound=256 nu_closure=literal nu_seed=fn step_bound=8");
  CHECK(to_string(parse_config("")) == to_string(c));
}

TEST_CASE("parsing") {
  Config c = parse_config(R"(
# comment
class_budget = 64
sample_bound=32   # trailing
nu_closure = "class-closure"
nu_seed = np
step_bound = 3
)");
  CHECK(c.class_budget == 64);
  CHECK(c.sample_bound == 32);
  CHECK(c.nu_closure == NuClosure::class_closure);
  CHECK(c.nu_seed == NuSeed::np);
  CHECK(c.step_bound == 3);
  CHECK(to_string(NuClosure::class_closure) == "class-closure");
  CHECK(to_string(NuSeed::np) == "np");
}

TEST_CASE("invalid entries") {
  CHECK_THROWS_AS(parse_config("colour = red"), Error);
  CHECK_THROWS_AS(parse_config("class_budget = 0"), Error);
  CHECK_THROWS_AS(parse_config("class_budget = -3"), Error);
  CHECK_THROWS_AS(parse_config("step_bound = many"), Error);
  CHECK_THROWS_AS(parse_config("nu_seed = all"), Error);
  CHECK_THROWS_AS(parse_config("just a line"), Error);
  Config c;
  CHECK_THROWS_AS(set_config_value(c, "nu_closure", "both"), Error);
  set_config_value(c, "step_bound", "12");
  CHECK(c.step_bound == 12);
}

TEST_CASE("apply installs the defaults") {
  FusionLimits saved_limits = fusion_limits();
  PwfOptions saved_opts = pwf_options();
  Config c = parse_config("class_budget=10\nsample_bound=20\nnu_closure=class-closure\nnu_seed=np");
  apply(c);
  CHECK(fusion_limits().class_budget == 10);
  CHECK(fusion_limits().sample_bound == 20);
  CHECK(pwf_options().nu_closure == NuClosure::class_closure);
  CHECK(pwf_options().nu_seed == NuSeed::np);
  fusion_limits() = saved_limits;
  pwf_options() = saved_opts;
}
