#pragma once

#include <string>
#include <vector>

#include "pwfcalc/pwf.hpp"
#include "pwfcalc/report.hpp"

namespace pwfcalc {

struct HyCandidate {
  std::string label;
  std::vector<Name> params;
  Pwf body;
};

// Labels with a candidate encoding, and labels left without one.
const std::vector<std::string>& hy_encodable_labels();
const std::vector<std::string>& hy_unencodable_labels();
// The reason recorded for a label without an encoding.
const std::string& hy_non_encodability_finding();

// M(a,b), K(a), F(a,b), D(a,b,c); throws not_representable for Bl, Br and S,
// invalid_argument for other labels or a wrong parameter count.
HyCandidate encode(const std::string& label, const std::vector<Name>& params);

// K|M, F|M and D|M reduce to their expected residues within `bound` steps.
Report check_hy_reductions(std::size_t bound = 1);

}  // namespace pwfcalc
