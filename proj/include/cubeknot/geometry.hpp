#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cubeknot/rational.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cubeknot {

// Execution mode for the data-parallel kernels. `parallel` uses OpenMP;
// `serial` is the reference path kept for testing and benchmarking.
enum class Exec { serial, parallel };

template <class F>
void parallel_for(std::size_t n, Exec exec, F&& f) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < static_cast<long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

// Conservatively inflated double bounding box; a miss is a proof of
// disjointness, a hit falls through to the exact predicate.
struct BBoxF {
    double lo[3], hi[3];

    static BBoxF of_segment(const Vec3& a, const Vec3& b);
    bool overlaps(const BBoxF& o) const {
        for (int k = 0; k < 3; ++k)
            if (lo[k] > o.hi[k] || o.lo[k] > hi[k]) return false;
        return true;
    }
};

enum class SegX { none, point, overlap };

struct SegHit {
    SegX kind = SegX::none;
    Rat s, t;  // intersection parameters when kind == point
};

// Exact closed-segment intersection in 3D.
SegHit segment_intersect(const Vec3& a0, const Vec3& a1, const Vec3& b0,
                         const Vec3& b1);

struct Seg2Hit {
    SegX kind = SegX::none;
    Rat s, t;
};

// Exact closed-segment intersection in the plane.
Seg2Hit segment_intersect_2d(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                             const Vec2& b1);

// Exact minimum over [0,1]^2 of
//   |p(s) - q(t)|^2 - (ra(s) + rb(t))^2
// where p, q run along the segments and ra, rb interpolate the endpoint
// radii. Nonnegative value certifies that the two radius-weighted tube
// pieces stay apart.
Rat tube_clearance(const Vec3& a0, const Vec3& a1, const Rat& ra0,
                   const Rat& ra1, const Vec3& b0, const Vec3& b1,
                   const Rat& rb0, const Rat& rb1);

// Exact squared distance between two closed segments.
Rat segment_distance2(const Vec3& a0, const Vec3& a1, const Vec3& b0,
                      const Vec3& b1);

}  // namespace cubeknot
