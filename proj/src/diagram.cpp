#include "cubeknot/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "cubeknot/errors.hpp"

namespace cubeknot {

PolyLine close_long(const PolyLine& p, std::size_t level) {
    require(p.size() >= 2, "closure needs at least two vertices");
    const Vec3& first = p.v.front();
    const Vec3& last = p.v.back();
    require(first.z == 0 && last.z == 0,
            "far-arc closure expects axis-parallel ends in the z=0 plane");
    const Rat X(3 + static_cast<long>(level));
    const Rat Y(3 + static_cast<long>(level));
    PolyLine out = p;
    out.v.push_back(Vec3(X, last.y, Rat(0)));
    out.v.push_back(Vec3(X, -Y, Rat(0)));
    out.v.push_back(Vec3(-X, -Y, Rat(0)));
    out.v.push_back(Vec3(-X, first.y, Rat(0)));
    return out;
}

namespace {

struct GSeg {
    std::size_t comp, idx;
    Vec2 a, b;        // projected endpoints
    Rat za, zb;       // z along the sheared segment
    BBoxF box;
};

bool segs_adjacent(const GSeg& s, const GSeg& t, std::size_t comp_size) {
    if (s.comp != t.comp) return false;
    const std::size_t i = s.idx, j = t.idx;
    return i == j || (i + 1) % comp_size == j || (j + 1) % comp_size == i;
}

struct PairHit {
    std::size_t i, j;
    Rat s, t;
};

// One genericity attempt at a fixed shear. Returns false (and a reason)
// if a certificate fails; fills `hits` otherwise.
bool find_crossings(const std::vector<std::vector<Vec3>>& sheared,
                    std::vector<PairHit>& hits, std::string& why, Exec exec) {
    std::vector<GSeg> segs;
    for (std::size_t c = 0; c < sheared.size(); ++c) {
        const auto& comp = sheared[c];
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const Vec3& A = comp[i];
            const Vec3& B = comp[(i + 1) % comp.size()];
            GSeg g;
            g.comp = c;
            g.idx = i;
            g.a = Vec2(A.x, A.y);
            g.b = Vec2(B.x, B.y);
            g.za = A.z;
            g.zb = B.z;
            g.box = BBoxF::of_segment(Vec3(A.x, A.y, Rat(0)),
                                      Vec3(B.x, B.y, Rat(0)));
            segs.push_back(std::move(g));
        }
    }
    for (const auto& g : segs) {
        if (g.a == g.b) {
            why = "segment projects to a point";
            return false;
        }
    }

    const std::size_t n = segs.size();
    std::vector<std::vector<PairHit>> found(n);
    std::vector<char> bad(n, 0);
    parallel_for(n, exec, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adj =
                segs_adjacent(segs[i], segs[j], sheared[segs[i].comp].size());
            if (!segs[i].box.overlaps(segs[j].box)) continue;
            const Seg2Hit h = segment_intersect_2d(segs[i].a, segs[i].b,
                                                   segs[j].a, segs[j].b);
            if (h.kind == SegX::none) continue;
            if (h.kind == SegX::overlap) {
                bad[i] = 1;
                return;
            }
            const bool endpoint =
                h.s == 0 || h.s == 1 || h.t == 0 || h.t == 1;
            if (adj) {
                if (!endpoint) {
                    bad[i] = 1;
                    return;
                }
                continue;  // shared vertex
            }
            if (endpoint) {
                bad[i] = 1;  // vertex-on-segment incidence
                return;
            }
            found[i].push_back(PairHit{i, j, h.s, h.t});
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (bad[i]) {
            why = "overlapping or vertex-incident projection";
            return false;
        }
    }
    hits.clear();
    for (auto& f : found)
        for (auto& h : f) hits.push_back(std::move(h));

    // Triple-point certificate: all crossing points distinct.
    std::vector<Vec2> pts;
    pts.reserve(hits.size());
    for (const auto& h : hits) {
        const GSeg& g = segs[h.i];
        pts.push_back(g.a + (g.b - g.a) * h.s);
    }
    std::vector<std::size_t> order(pts.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) {
        if (pts[u].x != pts[v].x) return pts[u].x < pts[v].x;
        return pts[u].y < pts[v].y;
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        if (pts[order[k]] == pts[order[k + 1]]) {
            why = "triple point";
            return false;
        }
    }

    // Distinct z at every crossing (tangency certificate).
    for (const auto& h : hits) {
        const GSeg& gi = segs[h.i];
        const GSeg& gj = segs[h.j];
        const Rat zi = gi.za + (gi.zb - gi.za) * h.s;
        const Rat zj = gj.za + (gj.zb - gj.za) * h.t;
        if (zi == zj) {
            why = "strands touch in space";
            return false;
        }
    }
    return true;
}

}  // namespace

KnotDiagram project_to_diagram(const std::vector<PolyLine>& curves,
                               const std::vector<bool>& long_flags,
                               unsigned shear_seed, Exec exec) {
    require(curves.size() >= 1 && curves.size() <= 2,
            "projection expects one or two curves");
    require(long_flags.size() == curves.size(), "flag arity mismatch");

    std::vector<PolyLine> closed;
    for (std::size_t k = 0; k < curves.size(); ++k) {
        require(curves[k].size() >= 2, "curve too short");
        closed.push_back(long_flags[k] ? close_long(curves[k], k) : curves[k]);
    }

    constexpr unsigned kAttempts = 64;
    std::string why;
    for (unsigned a = 0; a < kAttempts; ++a) {
        const unsigned k = shear_seed + a;
        const Rat sx = k == 0 ? Rat(0) : Rat(static_cast<long>(k % 61), 61);
        const Rat sy =
            k == 0 ? Rat(0) : Rat(static_cast<long>((k * k + k) % 53), 53);

        std::vector<std::vector<Vec3>> sheared(closed.size());
        for (std::size_t c = 0; c < closed.size(); ++c) {
            sheared[c].reserve(closed[c].size());
            for (const auto& v : closed[c].v)
                sheared[c].push_back(
                    Vec3(v.x + sx * v.z, v.y + sy * v.z, v.z));
        }

        std::vector<PairHit> hits;
        if (!find_crossings(sheared, hits, why, exec)) continue;

        KnotDiagram d;
        d.shear_x = sx;
        d.shear_y = sy;
        d.sheared = sheared;
        d.comps.resize(sheared.size());
        std::vector<std::size_t> seg_base(sheared.size(), 0);
        for (std::size_t c = 0; c < sheared.size(); ++c) {
            if (c + 1 < sheared.size())
                seg_base[c + 1] = seg_base[c] + sheared[c].size();
            for (const auto& v : sheared[c])
                d.comps[c].push_back(Vec2(v.x, v.y));
        }
        auto locate = [&](std::size_t global) {
            std::size_t c = 0;
            while (c + 1 < sheared.size() && global >= seg_base[c + 1]) ++c;
            return std::pair<std::size_t, std::size_t>(c, global - seg_base[c]);
        };

        for (const auto& h : hits) {
            auto [ci, si] = locate(h.i);
            auto [cj, sj] = locate(h.j);
            const auto& vi = sheared[ci];
            const auto& vj = sheared[cj];
            const Vec3& A = vi[si];
            const Vec3& B = vi[(si + 1) % vi.size()];
            const Vec3& C = vj[sj];
            const Vec3& D = vj[(sj + 1) % vj.size()];
            const Rat zi = A.z + (B.z - A.z) * h.s;
            const Rat zj = C.z + (D.z - C.z) * h.t;
            CrossingEnd ei{ci, si, h.s, Vec2(B.x - A.x, B.y - A.y)};
            CrossingEnd ej{cj, sj, h.t, Vec2(D.x - C.x, D.y - C.y)};
            Crossing cr;
            cr.pos = Vec2(A.x + (B.x - A.x) * h.s, A.y + (B.y - A.y) * h.s);
            if (zi > zj) {
                cr.over = ei;
                cr.under = ej;
            } else {
                cr.over = ej;
                cr.under = ei;
            }
            cr.sign = cross(cr.over.dir, cr.under.dir) > 0 ? 1 : -1;
            d.crossings.push_back(std::move(cr));
        }

        // Traversal order of passes per component.
        d.passes.resize(d.comps.size());
        for (std::size_t c = 0; c < d.comps.size(); ++c) {
            struct Ent {
                std::size_t seg;
                Rat param;
                Pass pass;
            };
            std::vector<Ent> ents;
            for (std::size_t x = 0; x < d.crossings.size(); ++x) {
                const Crossing& cr = d.crossings[x];
                if (cr.over.comp == c)
                    ents.push_back({cr.over.seg, cr.over.param, Pass{x, true}});
                if (cr.under.comp == c)
                    ents.push_back(
                        {cr.under.seg, cr.under.param, Pass{x, false}});
            }
            std::sort(ents.begin(), ents.end(), [](const Ent& u, const Ent& v) {
                if (u.seg != v.seg) return u.seg < v.seg;
                return u.param < v.param;
            });
            for (auto& e : ents) d.passes[c].push_back(e.pass);
        }
        return d;
    }
    throw contract_violation("shear schedule exhausted: " + why);
}

long writhe(const KnotDiagram& d) {
    require(d.comps.size() == 1, "writhe expects one component");
    long w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

long linking_number(const KnotDiagram& d) {
    require(d.comps.size() == 2, "linking number expects two components");
    long s = 0;
    for (const auto& c : d.crossings)
        if (c.over.comp != c.under.comp) s += c.sign;
    require(s % 2 == 0, "internal: odd inter-component crossing sum");
    return s / 2;
}

std::string gauss_code(const KnotDiagram& d) {
    std::ostringstream os;
    for (std::size_t c = 0; c < d.passes.size(); ++c) {
        if (c) os << '\n';
        bool first = true;
        for (const auto& p : d.passes[c]) {
            if (!first) os << ' ';
            first = false;
            os << (p.is_over ? 'O' : 'U') << (p.crossing + 1)
               << (d.crossings[p.crossing].sign > 0 ? '+' : '-');
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Goeritz determinant via the checkerboard coloring of the projection.

namespace {

// ccw angular order; vectors must be nonzero and pairwise non-parallel.
bool ccw_less(const Vec2& u, const Vec2& v) {
    auto half = [](const Vec2& w) {
        return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1;
    };
    const int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return cross(u, v) > 0;
}

Int bareiss_abs_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Int(0);
        if (piv != k) std::swap(m[piv], m[k]);
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num / prev;  // exact by Bareiss
            }
        prev = m[k][k];
    }
    Int det = m[n - 1][n - 1];
    return det < 0 ? Int(-det) : det;
}

}  // namespace

Int determinant(const KnotDiagram& d) {
    require(d.comps.size() == 1, "determinant expects one component");
    const std::size_t C = d.crossings.size();
    if (C == 0) return Int(1);
    const auto& passes = d.passes[0];
    require(passes.size() == 2 * C, "internal: pass count");

    // Darts: two per pass (in-side and out-side), indexed 2*p and 2*p+1.
    const std::size_t ndarts = 4 * C;
    auto dart_dir = [&](std::size_t dart) {
        const Pass& p = passes[dart / 2];
        const Crossing& cr = d.crossings[p.crossing];
        const Vec2& dir = p.is_over ? cr.over.dir : cr.under.dir;
        return (dart % 2 == 0) ? Vec2(Rat(0) - dir.x, Rat(0) - dir.y) : dir;
    };
    auto dart_crossing = [&](std::size_t dart) {
        return passes[dart / 2].crossing;
    };

    // alpha: out-dart of pass p pairs with in-dart of pass p+1.
    std::vector<std::size_t> alpha(ndarts);
    for (std::size_t p = 0; p < 2 * C; ++p) {
        const std::size_t q = (p + 1) % (2 * C);
        alpha[2 * p + 1] = 2 * q;
        alpha[2 * q] = 2 * p + 1;
    }

    // sigma: ccw successor among the four darts at each crossing.
    std::vector<std::vector<std::size_t>> at(C);
    for (std::size_t dart = 0; dart < ndarts; ++dart)
        at[dart_crossing(dart)].push_back(dart);
    std::vector<std::size_t> sigma(ndarts);
    for (std::size_t c = 0; c < C; ++c) {
        auto& ds = at[c];
        require(ds.size() == 4, "internal: crossing valence");
        std::sort(ds.begin(), ds.end(), [&](std::size_t u, std::size_t v) {
            return ccw_less(dart_dir(u), dart_dir(v));
        });
        for (std::size_t k = 0; k < 4; ++k) sigma[ds[k]] = ds[(k + 1) % 4];
    }

    // Faces: orbits of sigma(alpha(.)); face_of[dart] = face left of dart.
    std::vector<long> face_of(ndarts, -1);
    long nfaces = 0;
    for (std::size_t s = 0; s < ndarts; ++s) {
        if (face_of[s] != -1) continue;
        std::size_t dart = s;
        do {
            face_of[dart] = nfaces;
            dart = sigma[alpha[dart]];
        } while (dart != s);
        ++nfaces;
    }
    require(static_cast<std::size_t>(nfaces) == C + 2,
            "internal: Euler characteristic");

    // Checkerboard coloring.
    std::vector<int> color(nfaces, -1);
    std::vector<long> stack;
    color[face_of[0]] = 0;
    stack.push_back(face_of[0]);
    while (!stack.empty()) {
        const long f = stack.back();
        stack.pop_back();
        for (std::size_t dart = 0; dart < ndarts; ++dart) {
            if (face_of[dart] != f) continue;
            const long g = face_of[alpha[dart]];
            if (color[g] == -1) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            } else {
                require(color[g] != color[f],
                        "internal: projection not checkerboard colorable");
            }
        }
    }

    // The face whose sector at crossing c contains direction w.
    auto sector_face = [&](std::size_t c, const Vec2& w) {
        const auto& ds = at[c];  // ccw sorted
        for (std::size_t k = 0; k < 4; ++k) {
            const Vec2 u = dart_dir(ds[k]);
            const Vec2 v = dart_dir(ds[(k + 1) % 4]);
            // w strictly inside the ccw sector from u to v
            const bool inside =
                (k + 1 < 4) ? (ccw_less(u, w) && ccw_less(w, v))
                            : (ccw_less(u, w) || ccw_less(w, v));
            if (inside) return face_of[ds[k]];
        }
        throw contract_violation("internal: sector lookup");
    };

    // White = color 0. Kauffman rule: rotating the over-strand ccw onto the
    // under-strand sweeps two opposite sectors; eta = +1 when they are white.
    std::size_t nwhite = 0;
    std::vector<long> white_id(nfaces, -1);
    for (long f = 0; f < nfaces; ++f)
        if (color[f] == 0) white_id[f] = static_cast<long>(nwhite++);

    std::vector<std::vector<Int>> G(nwhite, std::vector<Int>(nwhite, Int(0)));
    for (std::size_t c = 0; c < C; ++c) {
        const Crossing& cr = d.crossings[c];
        const Vec2& o = cr.over.dir;
        Vec2 u = cr.under.dir;
        if (cross(o, u) < 0) u = Vec2(Rat(0) - u.x, Rat(0) - u.y);
        const Vec2 sweep = o + u;       // inside the ccw sweep sectors
        const Vec2 other = o - u;       // inside the complementary sectors
        const long fs = sector_face(c, sweep);
        const long fs2 = sector_face(c, Vec2(Rat(0) - sweep.x, Rat(0) - sweep.y));
        long f1, f2;
        int eta;
        if (color[fs] == 0) {
            require(color[fs2] == 0, "internal: sector coloring");
            f1 = fs;
            f2 = fs2;
            eta = 1;
        } else {
            f1 = sector_face(c, other);
            f2 = sector_face(c, Vec2(Rat(0) - other.x, Rat(0) - other.y));
            require(color[f1] == 0 && color[f2] == 0,
                    "internal: sector coloring");
            eta = -1;
        }
        if (f1 == f2) continue;
        const long w1 = white_id[f1], w2 = white_id[f2];
        G[w1][w2] -= eta;
        G[w2][w1] -= eta;
        G[w1][w1] += eta;
        G[w2][w2] += eta;
    }

    if (nwhite <= 1) return Int(1);
    std::vector<std::vector<Int>> minor(nwhite - 1,
                                        std::vector<Int>(nwhite - 1));
    for (std::size_t i = 0; i + 1 < nwhite; ++i)
        for (std::size_t j = 0; j + 1 < nwhite; ++j) minor[i][j] = G[i][j];
    return bareiss_abs_det(std::move(minor));
}

}  // namespace cubeknot
