#pragma once

#include <string>

#include "qham/polytope.hpp"

namespace qham {

// Figure for rank <= 2 alcoves (SU(2) segment, SU(3) triangle): alcove
// boundary, both hulls, and a deterministic decimation of the samples.
// Throws for higher ranks.
std::string convexity_svg(const SampleBatch& full, const SampleBatch& fixed,
                          const Hull& hull_full, const Hull& hull_fixed);

// Alcove vertices of SU(n) in eigen-angle coordinates.
std::vector<AlcovePoint> alcove_vertices(int n);

}  // namespace qham
