#include "cubeknot/tube.hpp"

#include <algorithm>
#include <cmath>

#include "cubeknot/diagram.hpp"
#include "cubeknot/errors.hpp"

namespace cubeknot {

FramedTubeKnot unknot() {
    FramedTubeKnot f;
    f.core = long_axis();
    f.radius = {Rat(1), Rat(1)};
    return f;
}

FramedTubeKnot with_framing(FramedTubeKnot f, long w) {
    f.framing = w;
    return f;
}

void validate_knot(const FramedTubeKnot& f, Exec exec) {
    require(is_long_shape(f.core), "knot core must be a long polyline");
    require(inside_unit_tube(f.core), "knot core must lie in I x D^2");
    require(f.radius.size() == f.core.size(),
            "radius profile arity mismatch");
    for (const Rat& r : f.radius)
        require(r > 0 && r <= 1, "tube radius out of (0,1]");
    require(f.radius.front() == 1 && f.radius.back() == 1,
            "tube radius must be 1 at both ends");
    const EmbedReport rep = check_embedded(f.core, false, exec);
    require(rep.ok, "knot core is not embedded: " + rep.why);
}

FramedTubeKnot mu_rescale(const LittleCube& interval,
                          const FramedTubeKnot& f) {
    require(interval.dimension() == 1, "mu rescaling wants a 1-cube");
    const AffineAxis& l = interval.axis(0);
    FramedTubeKnot out;
    out.framing = f.framing;
    out.core.v.reserve(f.core.size());
    for (const auto& p : f.core.v) out.core.v.push_back(Vec3(l(p.x), p.y, p.z));
    out.radius.reserve(f.radius.size());
    for (std::size_t i = 0; i < f.radius.size(); ++i) {
        const bool end = i == 0 || i + 1 == f.radius.size();
        out.radius.push_back(end ? f.radius[i] : Rat(l.a * f.radius[i]));
    }
    return out;
}

namespace {

struct DVec {
    double x, y, z;
};

DVec dnorm(DVec v) {
    const double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    return {v.x / n, v.y / n, v.z / n};
}

DVec dsub(DVec a, DVec b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double ddot(DVec a, DVec b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
DVec dscale(DVec a, double s) { return {a.x * s, a.y * s, a.z * s}; }

// Double-reflection rotation-minimizing frame transport.
std::vector<DVec> rmf_float(const std::vector<Vec3>& core) {
    const std::size_t n = core.size();
    std::vector<DVec> pts(n), tans(n);
    for (std::size_t i = 0; i < n; ++i)
        pts[i] = {rat_double(core[i].x), rat_double(core[i].y),
                  rat_double(core[i].z)};
    for (std::size_t i = 0; i < n; ++i) {
        // frame is orthogonal to the incoming segment
        const DVec d = i == 0 ? DVec{1, 0, 0} : dsub(pts[i], pts[i - 1]);
        tans[i] = dnorm(d);
    }
    std::vector<DVec> u(n);
    u[0] = {0, 1, 0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const DVec v1 = dsub(pts[i + 1], pts[i]);
        const double c1 = ddot(v1, v1);
        const DVec uL = dsub(u[i], dscale(v1, 2 * ddot(v1, u[i]) / c1));
        const DVec tL = dsub(tans[i], dscale(v1, 2 * ddot(v1, tans[i]) / c1));
        const DVec v2 = dsub(tans[i + 1], tL);
        const double c2 = ddot(v2, v2);
        u[i + 1] = c2 < 1e-30
                       ? uL
                       : dsub(uL, dscale(v2, 2 * ddot(v2, uL) / c2));
        // keep orthogonal to the incoming tangent
        const double drift = ddot(u[i + 1], tans[i + 1]);
        u[i + 1] = dnorm(dsub(u[i + 1], dscale(tans[i + 1], drift)));
    }
    return u;
}

Vec3 snap_vec(const DVec& v, long den) {
    auto snap = [&](double x) {
        return Rat(static_cast<long>(std::llround(x * den)), den);
    };
    return Vec3(snap(v.x), snap(v.y), snap(v.z));
}

// tolerance bound tau_frame for snapped frames
const Rat kTau(1, 128);

bool frames_certified(const std::vector<Vec3>& core,
                      const std::vector<Vec3>& u,
                      const std::vector<Vec3>& v) {
    const Rat tau2 = kTau * kTau;
    for (std::size_t i = 0; i < core.size(); ++i) {
        const Vec3 d = i == 0 ? Vec3(Rat(1), Rat(0), Rat(0))
                              : core[i] - core[i - 1];
        const Rat dd = norm2(d);
        const Rat uu = norm2(u[i]);
        const Rat vv = norm2(v[i]);
        const Rat du = dot(d, u[i]);
        const Rat dv = dot(d, v[i]);
        const Rat uv = dot(u[i], v[i]);
        if (du * du > tau2 * dd * uu) return false;
        if (dv * dv > tau2 * dd * vv) return false;
        if (uv * uv > tau2 * uu * vv) return false;
        if ((uu - 1) * (uu - 1) > tau2) return false;
        if ((vv - 1) * (vv - 1) > tau2) return false;
    }
    return true;
}

struct FramePair {
    std::vector<Vec3> u, v;
};

FramePair snapped_frames(const PolyLine& core) {
    const std::vector<DVec> uf = rmf_float(core.v);
    const std::size_t n = core.size();
    for (long den : {4096L, 1L << 16, 1L << 20, 1L << 24, 1L << 28}) {
        FramePair fp;
        fp.u.resize(n);
        fp.v.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const DVec d = i == 0
                               ? DVec{1, 0, 0}
                               : dnorm(dsub(
                                     DVec{rat_double(core.v[i].x),
                                          rat_double(core.v[i].y),
                                          rat_double(core.v[i].z)},
                                     DVec{rat_double(core.v[i - 1].x),
                                          rat_double(core.v[i - 1].y),
                                          rat_double(core.v[i - 1].z)}));
            const DVec w = {d.y * uf[i].z - d.z * uf[i].y,
                            d.z * uf[i].x - d.x * uf[i].z,
                            d.x * uf[i].y - d.y * uf[i].x};
            fp.u[i] = snap_vec(uf[i], den);
            fp.v[i] = snap_vec(w, den);
        }
        fp.u.front() = Vec3(Rat(0), Rat(1), Rat(0));
        fp.v.front() = Vec3(Rat(0), Rat(0), Rat(1));
        fp.u.back() = Vec3(Rat(0), Rat(1), Rat(0));
        fp.v.back() = Vec3(Rat(0), Rat(0), Rat(1));
        if (frames_certified(core.v, fp.u, fp.v)) return fp;
    }
    throw contract_violation(
        "frame snap could not certify the orthogonality bound");
}

// Conservative exact certificate that the cross-section discs at core
// vertices are pairwise disjoint. Primary route: segment-level clearance
// (distance vs interpolated radius sums); fallback: per-disc separating
// plane tests. Returns indices of an offending vertex pair, or nothing.
bool discs_certified(const FramedTubeKnot& f, const FramePair& fp,
                     Exec exec) {
    const auto& pts = f.core.v;
    const auto& r = f.radius;
    const std::size_t nseg = pts.size() - 1;

    std::vector<BBoxF> boxes(nseg);
    std::vector<double> segrad(nseg);
    for (std::size_t i = 0; i < nseg; ++i) {
        boxes[i] = BBoxF::of_segment(pts[i], pts[i + 1]);
        segrad[i] =
            std::max(rat_double(r[i]), rat_double(r[i + 1])) + 1e-9;
    }
    std::vector<Vec3> normals(pts.size());
    std::vector<Rat> lam(pts.size());  // disc-in-ball inflation factor
    for (std::size_t i = 0; i < pts.size(); ++i) {
        normals[i] = cross(fp.u[i], fp.v[i]);
        const Rat uu = norm2(fp.u[i]);
        const Rat vv = norm2(fp.v[i]);
        lam[i] = std::max(uu, vv) + rat_abs(dot(fp.u[i], fp.v[i]));
    }

    auto discs_apart = [&](std::size_t a, std::size_t b) {
        const Vec3 d = pts[b] - pts[a];
        const Rat dd = norm2(d);
        // ball bound: |d|^2 > (ra sqrt(la) + rb sqrt(lb))^2, avoiding roots
        const Rat ra2 = r[a] * r[a] * lam[a];
        const Rat rb2 = r[b] * r[b] * lam[b];
        if (dd > ra2 + rb2 + r[a] * r[b] * (lam[a] + lam[b])) return true;
        // separating plane of disc a
        const Vec3& n = normals[a];
        const Rat nd = dot(n, d);
        const Rat nu = dot(n, fp.u[b]);
        const Rat nv = dot(n, fp.v[b]);
        if (nd * nd > r[b] * r[b] * (nu * nu + nv * nv)) return true;
        // separating plane of disc b
        const Vec3& m = normals[b];
        const Rat md = dot(m, d);
        const Rat mu = dot(m, fp.u[a]);
        const Rat mv = dot(m, fp.v[a]);
        if (md * md > r[a] * r[a] * (mu * mu + mv * mv)) return true;
        return false;
    };

    std::vector<char> ok(nseg + 1, 1);
    parallel_for(nseg, exec, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < nseg; ++j) {
            const bool adj = j == i + 1;
            if (!adj) {
                BBoxF bi = boxes[i], bj = boxes[j];
                for (int k = 0; k < 3; ++k) {
                    bi.lo[k] -= segrad[i];
                    bi.hi[k] += segrad[i];
                    bj.lo[k] -= segrad[j];
                    bj.hi[k] += segrad[j];
                }
                if (!bi.overlaps(bj)) continue;
                if (tube_clearance(pts[i], pts[i + 1], r[i], r[i + 1],
                                   pts[j], pts[j + 1], r[j], r[j + 1]) > 0)
                    continue;
            }
            // sampled-disc fallback for the vertex pairs of these segments
            for (std::size_t a : {i, i + 1})
                for (std::size_t b : {j, j + 1}) {
                    if (a == b) continue;
                    if (!discs_apart(std::min(a, b), std::max(a, b))) {
                        ok[i] = 0;
                        return;
                    }
                }
        }
    });
    for (std::size_t i = 0; i < nseg; ++i)
        if (!ok[i]) return false;
    return true;
}

void certify_or_shrink(FramedTubeKnot& f, const FramePair& fp, Exec exec) {
    for (int attempt = 0; attempt <= 8; ++attempt) {
        if (discs_certified(f, fp, exec)) return;
        require(attempt < 8, "tube certification failed after 8 shrinks");
        for (std::size_t i = 1; i + 1 < f.radius.size(); ++i)
            f.radius[i] /= 2;
    }
}

long linking_core_pushoff(const FramedTubeKnot& f, const FramePair& fp,
                          Exec exec) {
    PolyLine push;
    push.v.reserve(f.core.size());
    for (std::size_t i = 0; i < f.core.size(); ++i)
        push.v.push_back(f.core.v[i] + fp.u[i] * (f.radius[i] / 2));
    const KnotDiagram d =
        project_to_diagram({f.core, push}, {true, true}, 0, exec);
    return linking_number(d);
}

// Quarter-turn twist insertion on the leading axis-parallel segment.
void insert_twists(FramedTubeKnot& f, FramePair& fp, long turns) {
    if (turns == 0) return;
    const Vec3& a = f.core.v[0];
    const Vec3& b = f.core.v[1];
    require(b.y == 0 && b.z == 0,
            "framing correction needs a straight leading segment");
    const long steps = 4 * std::labs(turns);
    std::vector<Vec3> verts;
    std::vector<Rat> radii;
    std::vector<Vec3> us, vs;
    const int dir = turns > 0 ? 1 : -1;
    static const Vec3 table_u[4] = {
        Vec3(Rat(0), Rat(1), Rat(0)), Vec3(Rat(0), Rat(0), Rat(1)),
        Vec3(Rat(0), Rat(-1), Rat(0)), Vec3(Rat(0), Rat(0), Rat(-1))};
    for (long k = 1; k <= steps; ++k) {
        const Rat t(k, steps + 1);
        verts.push_back(a + (b - a) * t);
        radii.push_back(f.radius[0] + (f.radius[1] - f.radius[0]) * t);
        const int phase = static_cast<int>(((k * dir) % 4 + 4) % 4);
        us.push_back(table_u[phase]);
        vs.push_back(table_u[(phase + 1) % 4]);
    }
    f.core.v.insert(f.core.v.begin() + 1, verts.begin(), verts.end());
    f.radius.insert(f.radius.begin() + 1, radii.begin(), radii.end());
    fp.u.insert(fp.u.begin() + 1, us.begin(), us.end());
    fp.v.insert(fp.v.begin() + 1, vs.begin(), vs.end());
}

}  // namespace

TubeMap build_tube_map(const FramedTubeKnot& f, Exec exec) {
    validate_knot(f, exec);
    TubeMap t;
    t.knot = f;
    FramePair fp = snapped_frames(t.knot.core);
    certify_or_shrink(t.knot, fp, exec);

    const long base = linking_core_pushoff(t.knot, fp, exec);
    long delta = t.knot.framing - base;
    if (delta != 0) {
        FramedTubeKnot twisted = t.knot;
        FramePair fpt = fp;
        insert_twists(twisted, fpt, delta);
        long got = linking_core_pushoff(twisted, fpt, exec);
        if (got != t.knot.framing) {
            // quarter-turn orientation convention runs the other way
            twisted = t.knot;
            fpt = fp;
            insert_twists(twisted, fpt, -delta);
            got = linking_core_pushoff(twisted, fpt, exec);
        }
        require(got == t.knot.framing,
                "framing correction failed to realize the framing number");
        t.knot = std::move(twisted);
        fp = std::move(fpt);
    }
    t.frame_u = std::move(fp.u);
    t.frame_v = std::move(fp.v);
    return t;
}

PolyLine push_off(const TubeMap& t) {
    PolyLine p;
    p.v.reserve(t.knot.core.size());
    for (std::size_t i = 0; i < t.knot.core.size(); ++i)
        p.v.push_back(t.knot.core.v[i] +
                      t.frame_u[i] * (t.knot.radius[i] / 2));
    return p;
}

namespace {

Rat floor_div(const Rat& q, long* frac_num_unused = nullptr) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(),
               q.get_den().get_mpz_t());
    return Rat(fl);
}

}  // namespace

TubedCurve apply_tube(const TubeMap& t, const PolyLine& curve,
                      const std::vector<Rat>* radius) {
    require(curve.size() >= 2, "curve too short");
    if (radius)
        require(radius->size() == curve.size(), "radius arity mismatch");
    const Rat lo = t.support_lo();
    const Rat hi = t.support_hi();
    const Rat width = hi - lo;
    const std::size_t m = t.knot.core.size() - 1;

    // Subdivide at support boundaries and at core-vertex slices.
    std::vector<Vec3> pts;
    std::vector<Rat> rads;
    auto push_point = [&](const Vec3& p, const Rat& r) {
        if (!pts.empty() && pts.back() == p) return;
        pts.push_back(p);
        rads.push_back(r);
    };
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const Vec3& P = curve.v[i];
        const Vec3& Q = curve.v[i + 1];
        const Rat rP = radius ? (*radius)[i] : Rat(1);
        const Rat rQ = radius ? (*radius)[i + 1] : Rat(1);
        push_point(P, rP);
        if (Q.x != P.x) {
            std::vector<Rat> cuts;
            auto add_cut = [&](const Rat& plane) {
                const Rat tt = (plane - P.x) / (Q.x - P.x);
                if (tt > 0 && tt < 1) cuts.push_back(tt);
            };
            add_cut(lo);
            add_cut(hi);
            const Rat xa = std::min(P.x, Q.x);
            const Rat xb = std::max(P.x, Q.x);
            for (std::size_t k = 1; k < m; ++k) {
                const Rat plane = lo + width * Rat(static_cast<long>(k),
                                                   static_cast<long>(m));
                if (plane > xa && plane < xb) add_cut(plane);
            }
            std::sort(cuts.begin(), cuts.end());
            for (const Rat& tt : cuts)
                push_point(P + (Q - P) * tt, rP + (rQ - rP) * tt);
        }
    }
    push_point(curve.v.back(), radius ? radius->back() : Rat(1));

    // Map the subdivided points.
    TubedCurve out;
    out.curve.v.reserve(pts.size());
    out.radius.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec3& p = pts[i];
        if (p.x < lo || p.x > hi) {
            out.curve.v.push_back(p);
            out.radius.push_back(rads[i]);
            continue;
        }
        if (p.x > lo && p.x < hi && p.y * p.y + p.z * p.z > 1)
            throw model_limitation(
                "curve enters the tube support box through its side");
        const Rat sigma = (p.x - lo) / width * Rat(static_cast<long>(m));
        Rat kf = floor_div(sigma);
        if (kf == static_cast<long>(m)) kf -= 1;
        const std::size_t k = kf.get_num().get_si();
        const Rat frac = sigma - kf;
        const Vec3 c = t.knot.core.v[k] +
                       (t.knot.core.v[k + 1] - t.knot.core.v[k]) * frac;
        const Vec3 u =
            t.frame_u[k] + (t.frame_u[k + 1] - t.frame_u[k]) * frac;
        const Vec3 v =
            t.frame_v[k] + (t.frame_v[k + 1] - t.frame_v[k]) * frac;
        const Rat r =
            t.knot.radius[k] + (t.knot.radius[k + 1] - t.knot.radius[k]) * frac;
        out.curve.v.push_back(c + (u * p.y + v * p.z) * r);
        out.radius.push_back(rads[i] * r);
    }

    // Consecutive duplicates can appear when a mapped chord degenerates.
    PolyLine dedup;
    std::vector<Rat> dedup_r;
    for (std::size_t i = 0; i < out.curve.size(); ++i) {
        if (!dedup.v.empty() && dedup.v.back() == out.curve.v[i]) continue;
        dedup.v.push_back(out.curve.v[i]);
        dedup_r.push_back(out.radius[i]);
    }
    out.curve = std::move(dedup);
    out.radius = std::move(dedup_r);
    return out;
}

namespace {

std::vector<std::size_t> canonical_order(const ProjectionData& pd) {
    std::vector<std::size_t> order(pd.t.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pd.t[a] != pd.t[b]) return pd.t[a] > pd.t[b];
        return a < b;
    });
    return order;
}

}  // namespace

std::vector<TubeMap> kappa_tube_maps(const CubeConfig& config,
                                     const std::vector<FramedTubeKnot>& knots,
                                     Exec exec) {
    require(config.dimension() == 2, "kappa acts through 2-cubes");
    require(config.arity() == knots.size(), "kappa arity mismatch");
    const ProjectionData pd = project(config);
    std::vector<TubeMap> maps;
    for (std::size_t idx : canonical_order(pd))
        maps.push_back(build_tube_map(mu_rescale(pd.pi[idx], knots[idx]), exec));
    return maps;
}

FramedTubeKnot kappa_ordered(const CubeConfig& config,
                             const std::vector<FramedTubeKnot>& knots,
                             const std::vector<std::size_t>& order,
                             Exec exec) {
    require(config.dimension() == 2, "kappa acts through 2-cubes");
    require(config.arity() == knots.size(), "kappa arity mismatch");
    require(order.size() == knots.size(), "kappa order arity mismatch");
    require(perm_valid(order), "kappa order is not a permutation");
    if (knots.empty()) return unknot();
    const ProjectionData pd = project(config);
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        require(pd.t[order[i]] >= pd.t[order[i + 1]],
                "kappa order must be non-increasing in L^t");

    PolyLine curve = long_axis();
    std::vector<Rat> radii{Rat(1), Rat(1)};
    long framing = 0;
    for (std::size_t idx : order) {
        const TubeMap t =
            build_tube_map(mu_rescale(pd.pi[idx], knots[idx]), exec);
        TubedCurve next = apply_tube(t, curve, &radii);
        const EmbedReport rep = check_embedded(next.curve, false, exec);
        require(rep.ok, "non-embedded intermediate in kappa: " + rep.why);
        curve = std::move(next.curve);
        radii = std::move(next.radius);
        framing += knots[idx].framing;
    }

    FramedTubeKnot out;
    out.core = std::move(curve);
    out.radius = std::move(radii);
    out.framing = framing;
    for (Rat& r : out.radius) r = std::min(r, Rat(1));
    out.radius.front() = 1;
    out.radius.back() = 1;
    const FramePair fp = snapped_frames(out.core);
    certify_or_shrink(out, fp, exec);
    return out;
}

FramedTubeKnot kappa(const CubeConfig& config,
                     const std::vector<FramedTubeKnot>& knots, Exec exec) {
    if (knots.empty()) {
        require(config.arity() == 0, "kappa arity mismatch");
        return unknot();
    }
    const ProjectionData pd = project(config);
    return kappa_ordered(config, knots, canonical_order(pd), exec);
}

long framing_number(const FramedTubeKnot& f, Exec exec) {
    const TubeMap t = build_tube_map(f, exec);
    FramePair fp{t.frame_u, t.frame_v};
    const long lk = linking_core_pushoff(t.knot, fp, exec);
    require(lk == f.framing,
            "stored framing disagrees with the push-off linking number");
    return lk;
}

}  // namespace cubeknot
