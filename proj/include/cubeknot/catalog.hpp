#pragma once

#include <string>
#include <vector>

#include "cubeknot/tube.hpp"

namespace cubeknot {

std::vector<std::string> catalog_names();

// Built-in long knots: unknot, trefoil, trefoil_mirror, figure8,
// figure8_mirror. All ship with framing 0.
FramedTubeKnot catalog_knot(const std::string& name);

FramedTubeKnot mirror_z(FramedTubeKnot f);

}  // namespace cubeknot
