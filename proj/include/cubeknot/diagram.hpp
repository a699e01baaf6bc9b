#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubeknot/geometry.hpp"
#include "cubeknot/polyline.hpp"
#include "cubeknot/rational.hpp"

namespace cubeknot {

// One strand end of a crossing: where the strand passes through it.
struct CrossingEnd {
    std::size_t comp = 0;  // component index
    std::size_t seg = 0;   // segment index within the closed component
    Rat param;             // position along the segment, in (0,1)
    Vec2 dir;              // projected direction of the strand
};

struct Crossing {
    CrossingEnd over, under;
    int sign = 0;  // sgn(cross(over.dir, under.dir)), right-handed
    Vec2 pos;
};

// A pass of a component through a crossing, in traversal order.
struct Pass {
    std::size_t crossing = 0;
    bool is_over = false;
};

// Exact planar diagram of one or two closed curves. Long curves are
// closed by a rectangular far arc before projection; the projection is
// along z after a shear chosen from a deterministic escalating schedule
// until the genericity certificates pass.
struct KnotDiagram {
    std::vector<std::vector<Vec2>> comps;       // projected closed polygons
    std::vector<std::vector<Vec3>> sheared;     // sheared 3D closed polygons
    std::vector<Crossing> crossings;
    std::vector<std::vector<Pass>> passes;      // per component
    Rat shear_x, shear_y;                       // shear actually used
};

// Closes a long polyline with a far rectangular arc; `level` staggers the
// arcs of distinct components so they stay disjoint.
PolyLine close_long(const PolyLine& p, std::size_t level);

KnotDiagram project_to_diagram(const std::vector<PolyLine>& curves,
                               const std::vector<bool>& long_flags,
                               unsigned shear_seed = 0,
                               Exec exec = Exec::parallel);

// Sum of crossing signs; requires a one-component diagram.
long writhe(const KnotDiagram& d);

// Half the signed count of inter-component crossings; requires two
// components.
long linking_number(const KnotDiagram& d);

// |H1| of the double branched cover, via the Goeritz matrix of a
// checkerboard coloring. 1 for the unknot.
Int determinant(const KnotDiagram& d);

// Signed Gauss code, tokens like "O1+ U2- ...", one line per component.
std::string gauss_code(const KnotDiagram& d);

}  // namespace cubeknot
