#pragma once

#include <random>
#include <vector>

#include "pwfcalc/pwf.hpp"
#include "pwfcalc/report.hpp"

namespace pwfcalc {

struct RandomShape {
  std::size_t max_actions = 2;
  Name names = 4;             // subjects and fused names lie below this
  std::size_t max_class = 3;  // largest class of the random fusion
  std::size_t max_pairs = 2;
};

// Finite fusion over names below `names` with classes of at most `max_class` names.
Fusion random_fusion(std::mt19937& rng, Name names, std::size_t max_class, std::size_t max_links);
// Process over subjects below s.names; binders lie at or above s.names, so prefixes never
// capture a fused name.
Process random_process(std::mt19937& rng, const RandomShape& s);
Pwf random_pwf(std::mt19937& rng, const RandomShape& s);

struct LawSuiteOptions {
  unsigned seed = 7;
  std::size_t fusion_samples = 100;
  std::size_t injection_samples = 100;
  std::size_t parallel_samples = 100;
  std::size_t lemma_samples = 50;
  Name probe_bound = 256;
};

Report check_fusion_laws(const LawSuiteOptions& o = {});
Report check_injection_corollaries(const LawSuiteOptions& o = {});
Report check_nu_laws(const LawSuiteOptions& o = {});
Report check_adjoint_parallel(const LawSuiteOptions& o = {});
Report check_adequacy_lemmas(const LawSuiteOptions& o = {});

}  // namespace pwfcalc
