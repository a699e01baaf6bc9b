#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubeknot/geometry.hpp"
#include "cubeknot/rational.hpp"

namespace cubeknot {

// PL curve through rational points. A "long" polyline runs from
// (x0,0,0) to (x1,0,0) on the axis and extends implicitly as the
// straight line y = z = 0 outside its span.
struct PolyLine {
    std::vector<Vec3> v;

    std::size_t size() const { return v.size(); }
    bool operator==(const PolyLine& o) const { return v == o.v; }
    bool operator!=(const PolyLine& o) const { return v != o.v; }
};

// Straight long axis from (-1,0,0) to (1,0,0).
PolyLine long_axis();

// First/last vertex on the axis (y = z = 0), consecutive vertices distinct.
bool is_long_shape(const PolyLine& p);

// All points satisfy |x| <= 1 and y^2 + z^2 <= 1.
bool inside_unit_tube(const PolyLine& p);

struct EmbedReport {
    bool ok = true;
    std::size_t i = 0, j = 0;  // offending segment pair when !ok
    std::string why;
};

// Exact self-intersection test. Non-adjacent segments must be disjoint;
// adjacent segments may meet only at their shared vertex.
EmbedReport check_embedded(const PolyLine& p, bool closed,
                           Exec exec = Exec::parallel);

// Exact disjointness of two curves.
EmbedReport check_disjoint(const PolyLine& a, const PolyLine& b,
                           Exec exec = Exec::parallel);

}  // namespace cubeknot
