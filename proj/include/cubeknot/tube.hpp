#pragma once

#include <cstddef>
#include <vector>

#include "cubeknot/cube.hpp"
#include "cubeknot/polyline.hpp"

namespace cubeknot {

// PL model of a framed long knot: embedded core with axis-aligned ends,
// framing integer and a per-vertex tube radius profile.
struct FramedTubeKnot {
    PolyLine core;            // long; spans [x0,x1] on the axis
    long framing = 0;
    std::vector<Rat> radius;  // in (0,1], == 1 at both ends
};

FramedTubeKnot unknot();
FramedTubeKnot with_framing(FramedTubeKnot f, long w);

// Shape, containment, radius-range and exact embeddedness checks.
void validate_knot(const FramedTubeKnot& f, Exec exec = Exec::parallel);

// Tube structure over a knot: rational frames spanning the cross-section
// disc at each core vertex.
struct TubeMap {
    FramedTubeKnot knot;  // radii may have been shrunk by certification
    std::vector<Vec3> frame_u, frame_v;

    Rat support_lo() const { return knot.core.v.front().x; }
    Rat support_hi() const { return knot.core.v.back().x; }
};

// x |-> a x + b along the axis; interior radii scale by the width a,
// endpoint radii stay 1, framing unchanged.
FramedTubeKnot mu_rescale(const LittleCube& interval, const FramedTubeKnot& f);

// Discrete rotation-minimizing frame snapped to rationals, cross-section
// discs certified disjoint (shrinking interior radii if needed), then
// twist-corrected so the push-off links the core exactly f.framing times.
TubeMap build_tube_map(const FramedTubeKnot& f, Exec exec = Exec::parallel);

// Parallel copy at half the tube radius: c + (r/2) u.
PolyLine push_off(const TubeMap& t);

struct TubedCurve {
    PolyLine curve;
    std::vector<Rat> radius;
};

// Evaluates the tube embedding on a curve: identity outside the support
// box, slice map c(x) + r(x)(y u(x) + z v(x)) inside, with the input
// subdivided at the support boundaries and at each core vertex slice.
TubedCurve apply_tube(const TubeMap& t, const PolyLine& curve,
                      const std::vector<Rat>* radius = nullptr);

// The tube maps kappa applies, in application order (descending L^t).
std::vector<TubeMap> kappa_tube_maps(const CubeConfig& config,
                                     const std::vector<FramedTubeKnot>& knots,
                                     Exec exec = Exec::parallel);

// Little 2-cubes action on framed long knots.
FramedTubeKnot kappa(const CubeConfig& config,
                     const std::vector<FramedTubeKnot>& knots,
                     Exec exec = Exec::parallel);

// kappa under an explicit application order; the order must list indices
// by non-increasing L^t. Exposed so order independence under L^t ties can
// be exercised directly.
FramedTubeKnot kappa_ordered(const CubeConfig& config,
                             const std::vector<FramedTubeKnot>& knots,
                             const std::vector<std::size_t>& order,
                             Exec exec = Exec::parallel);

// Linking number of the core with the tube push-off; must agree with the
// stored framing field.
long framing_number(const FramedTubeKnot& f, Exec exec = Exec::parallel);

}  // namespace cubeknot
