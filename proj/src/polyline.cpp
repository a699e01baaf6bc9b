#include "cubeknot/polyline.hpp"

namespace cubeknot {

PolyLine long_axis() {
    return PolyLine{{Vec3(Rat(-1), Rat(0), Rat(0)), Vec3(Rat(1), Rat(0), Rat(0))}};
}

bool is_long_shape(const PolyLine& p) {
    if (p.size() < 2) return false;
    const Vec3& a = p.v.front();
    const Vec3& b = p.v.back();
    if (a.y != 0 || a.z != 0 || b.y != 0 || b.z != 0) return false;
    if (a.x >= b.x) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p.v[i] == p.v[i + 1]) return false;
    return true;
}

bool inside_unit_tube(const PolyLine& p) {
    for (const auto& q : p.v) {
        if (rat_abs(q.x) > 1) return false;
        if (q.y * q.y + q.z * q.z > 1) return false;
    }
    return true;
}

namespace {

struct SegList {
    const std::vector<Vec3>* pts;
    bool closed;

    std::size_t count() const {
        return closed ? pts->size() : pts->size() - 1;
    }
    const Vec3& a(std::size_t i) const { return (*pts)[i]; }
    const Vec3& b(std::size_t i) const {
        return (*pts)[(i + 1) % pts->size()];
    }
};

bool adjacent(const SegList& s, std::size_t i, std::size_t j) {
    if (i == j) return true;
    if (j == i + 1 || i == j + 1) return true;
    if (s.closed && ((i == 0 && j == s.count() - 1) ||
                     (j == 0 && i == s.count() - 1)))
        return true;
    return false;
}

}  // namespace

EmbedReport check_embedded(const PolyLine& p, bool closed, Exec exec) {
    EmbedReport rep;
    if (p.size() < 2) return rep;
    SegList segs{&p.v, closed};
    const std::size_t n = segs.count();

    // Adjacent pairs: shared vertex only, no doubling back.
    for (std::size_t i = 0; i < n; ++i) {
        if (segs.a(i) == segs.b(i)) {
            rep = {false, i, i, "zero-length segment"};
            return rep;
        }
        const std::size_t j = (i + 1) % p.v.size();
        if (!closed && j >= n) break;
        if (j >= n) continue;
        const Vec3 d0 = segs.b(i) - segs.a(i);
        const Vec3 d1 = segs.b(j) - segs.a(j);
        if (norm2(cross(d0, d1)) == 0 && dot(d0, d1) < 0) {
            rep = {false, i, j, "adjacent segments double back"};
            return rep;
        }
    }

    std::vector<BBoxF> boxes(n);
    for (std::size_t i = 0; i < n; ++i)
        boxes[i] = BBoxF::of_segment(segs.a(i), segs.b(i));

    std::vector<std::size_t> hit(n, n);  // hit[i] = smallest bad j
    parallel_for(n, exec, [&](std::size_t i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (adjacent(segs, i, j)) continue;
            if (!boxes[i].overlaps(boxes[j])) continue;
            const SegHit h =
                segment_intersect(segs.a(i), segs.b(i), segs.a(j), segs.b(j));
            if (h.kind != SegX::none) {
                hit[i] = j;
                break;
            }
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        if (hit[i] != n) {
            rep = {false, i, hit[i], "non-adjacent segments intersect"};
            return rep;
        }
    }
    return rep;
}

EmbedReport check_disjoint(const PolyLine& a, const PolyLine& b, Exec exec) {
    EmbedReport rep;
    if (a.size() < 2 || b.size() < 2) return rep;
    const std::size_t na = a.size() - 1;
    const std::size_t nb = b.size() - 1;
    std::vector<BBoxF> boxa(na), boxb(nb);
    for (std::size_t i = 0; i < na; ++i)
        boxa[i] = BBoxF::of_segment(a.v[i], a.v[i + 1]);
    for (std::size_t j = 0; j < nb; ++j)
        boxb[j] = BBoxF::of_segment(b.v[j], b.v[j + 1]);

    std::vector<std::size_t> hit(na, nb);
    parallel_for(na, exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < nb; ++j) {
            if (!boxa[i].overlaps(boxb[j])) continue;
            const SegHit h =
                segment_intersect(a.v[i], a.v[i + 1], b.v[j], b.v[j + 1]);
            if (h.kind != SegX::none) {
                hit[i] = j;
                break;
            }
        }
    });
    for (std::size_t i = 0; i < na; ++i) {
        if (hit[i] != nb) {
            rep = {false, i, hit[i], "curves intersect"};
            return rep;
        }
    }
    return rep;
}

}  // namespace cubeknot
