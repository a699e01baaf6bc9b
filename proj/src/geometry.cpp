#include "cubeknot/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cubeknot/errors.hpp"

namespace cubeknot {

namespace {

// Coordinates in this artifact stay within single digits; an absolute
// inflation covers the rational-to-double rounding.
constexpr double kBoxPad = 1e-7;

}  // namespace

BBoxF BBoxF::of_segment(const Vec3& a, const Vec3& b) {
    BBoxF box;
    const double av[3] = {rat_double(a.x), rat_double(a.y), rat_double(a.z)};
    const double bv[3] = {rat_double(b.x), rat_double(b.y), rat_double(b.z)};
    for (int k = 0; k < 3; ++k) {
        box.lo[k] = std::min(av[k], bv[k]) - kBoxPad;
        box.hi[k] = std::max(av[k], bv[k]) + kBoxPad;
    }
    return box;
}

SegHit segment_intersect(const Vec3& a0, const Vec3& a1, const Vec3& b0,
                         const Vec3& b1) {
    const Vec3 da = a1 - a0;
    const Vec3 db = b1 - b0;
    require(norm2(da) != 0 && norm2(db) != 0, "degenerate segment");
    const Vec3 w = b0 - a0;
    const Vec3 n = cross(da, db);
    SegHit hit;
    if (norm2(n) != 0) {
        if (dot(w, n) != 0) return hit;  // skew lines
        const Rat nn = norm2(n);
        Rat s = dot(cross(w, db), n) / nn;
        Rat t = dot(cross(w, da), n) / nn;
        if (s < 0 || s > 1 || t < 0 || t > 1) return hit;
        hit.kind = SegX::point;
        hit.s = std::move(s);
        hit.t = std::move(t);
        return hit;
    }
    // Parallel lines.
    if (norm2(cross(w, da)) != 0) return hit;
    // Collinear: project b's endpoints onto a's parameter.
    const Rat la = norm2(da);
    Rat t0 = dot(b0 - a0, da) / la;
    Rat t1 = dot(b1 - a0, da) / la;
    if (t0 > t1) std::swap(t0, t1);
    const Rat lo = std::max(Rat(0), t0);
    const Rat hi = std::min(Rat(1), t1);
    if (lo > hi) return hit;
    if (lo == hi) {
        hit.kind = SegX::point;
        hit.s = lo;
        hit.t = dot(a0 + da * lo - b0, db) / norm2(db);
        return hit;
    }
    hit.kind = SegX::overlap;
    return hit;
}

Seg2Hit segment_intersect_2d(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                             const Vec2& b1) {
    const Vec2 da = a1 - a0;
    const Vec2 db = b1 - b0;
    require(norm2(da) != 0 && norm2(db) != 0, "degenerate segment");
    const Vec2 w = b0 - a0;
    const Rat denom = cross(da, db);
    Seg2Hit hit;
    if (denom != 0) {
        Rat s = cross(w, db) / denom;
        Rat t = cross(w, da) / denom;
        if (s < 0 || s > 1 || t < 0 || t > 1) return hit;
        hit.kind = SegX::point;
        hit.s = std::move(s);
        hit.t = std::move(t);
        return hit;
    }
    if (cross(w, da) != 0) return hit;
    const Rat la = norm2(da);
    Rat t0 = dot(b0 - a0, da) / la;
    Rat t1 = dot(b1 - a0, da) / la;
    if (t0 > t1) std::swap(t0, t1);
    const Rat lo = std::max(Rat(0), t0);
    const Rat hi = std::min(Rat(1), t1);
    if (lo > hi) return hit;
    if (lo == hi) {
        hit.kind = SegX::point;
        hit.s = lo;
        hit.t = dot(a0 + da * lo - b0, db) / norm2(db);
        return hit;
    }
    hit.kind = SegX::overlap;
    return hit;
}

namespace {

// Quadratic q(u) = A u^2 + B u + C minimized over [0,1].
Rat min_quadratic_01(const Rat& A, const Rat& B, const Rat& C) {
    Rat best = std::min(C, A + B + C);
    if (A > 0) {
        const Rat u = -B / (2 * A);
        if (u > 0 && u < 1) best = std::min(best, (A * u + B) * u + C);
    }
    return best;
}

}  // namespace

Rat tube_clearance(const Vec3& a0, const Vec3& a1, const Rat& ra0,
                   const Rat& ra1, const Vec3& b0, const Vec3& b1,
                   const Rat& rb0, const Rat& rb1) {
    const Vec3 da = a1 - a0;
    const Vec3 db = b1 - b0;
    const Vec3 w = a0 - b0;
    const Rat ga = ra1 - ra0;
    const Rat gb = rb1 - rb0;
    const Rat K = ra0 + rb0;

    // h(s,t) = css s^2 + ctt t^2 + cst s t + cs s + ct t + c0
    const Rat css = norm2(da) - ga * ga;
    const Rat ctt = norm2(db) - gb * gb;
    const Rat cst = -2 * (dot(da, db) + ga * gb);
    const Rat cs = 2 * (dot(w, da) - K * ga);
    const Rat ct = -2 * (dot(w, db) + K * gb);
    const Rat c0 = norm2(w) - K * K;

    auto value = [&](const Rat& s, const Rat& t) {
        return css * s * s + ctt * t * t + cst * s * t + cs * s + ct * t + c0;
    };

    // Edge restrictions.
    Rat best = min_quadratic_01(css, cs, c0);                            // t=0
    best = std::min(best, min_quadratic_01(css, cs + cst, ctt + ct + c0));  // t=1
    best = std::min(best, min_quadratic_01(ctt, ct, c0));                // s=0
    best = std::min(best, min_quadratic_01(ctt, ct + cst, css + cs + c0));  // s=1

    // Interior critical point of the full quadratic.
    const Rat det = 4 * css * ctt - cst * cst;
    if (det != 0) {
        const Rat s = (cst * ct - 2 * ctt * cs) / det;
        const Rat t = (cst * cs - 2 * css * ct) / det;
        if (s > 0 && s < 1 && t > 0 && t < 1)
            best = std::min(best, value(s, t));
    }
    return best;
}

Rat segment_distance2(const Vec3& a0, const Vec3& a1, const Vec3& b0,
                      const Vec3& b1) {
    return tube_clearance(a0, a1, Rat(0), Rat(0), b0, b1, Rat(0), Rat(0));
}

}  // namespace cubeknot
