#pragma once

#include <string>

#include "gagc/constructions.hpp"

namespace gagc {

// Renders a verification report as JSON with a stable key layout:
// field{p,h,q}, e, theorem, params, length, dimension,
// design_distance_bound, checks{galois_so,dimension,mds,criterion}, seed.
std::string report_to_json(const ConstructionReport& rep);

}  // namespace gagc
