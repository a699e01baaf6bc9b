#include "cubeknot/catalog.hpp"

#include "cubeknot/errors.hpp"

namespace cubeknot {

namespace {

// Grid coordinates in eighths: the pattern lives on an integer/quarter grid
// spanning x in [-8,8], scaled into I x D^2. Crossings carry their over
// strand on a z=1 plateau inserted around the crossing point.
FramedTubeKnot from_grid(const std::vector<std::array<double, 3>>& grid) {
    FramedTubeKnot f;
    for (const auto& g : grid) {
        auto q = [](double x) {
            return Rat(static_cast<long>(x * 4), 32);  // grid/8, quarters
        };
        f.core.v.push_back(Vec3(q(g[0]), q(g[1]), q(g[2])));
    }
    const std::size_t n = f.core.size();
    f.radius.assign(n, Rat(1, 24));
    f.radius.front() = 1;
    f.radius.back() = 1;
    f.radius[1] = Rat(1, 8);
    f.radius[n - 2] = Rat(1, 8);
    return f;
}

// Long trefoil: trace closure of the 2-braid s1^3. Rows y=0,2; crossings
// at x=-2,0,2; the upgoing strand takes the plateau.
FramedTubeKnot trefoil_layout() {
    return from_grid({
        {-8, 0, 0},
        {-3, 0, 0},
        {-2.5, 0.5, 1},
        {-1.5, 1.5, 1},
        {-1, 2, 0},
        {1, 0, 0},
        {1.5, 0.5, 1},
        {2.5, 1.5, 1},
        {3, 2, 0},
        {4, 2, 0},
        {4, 6, 0},
        {-4, 6, 0},
        {-4, 2, 0},
        {-3, 2, 0},
        {-1, 0, 0},
        {-0.5, 0.5, 1},
        {0.5, 1.5, 1},
        {1, 2, 0},
        {3, 0, 0},
        {8, 0, 0},
    });
}

// Long figure-8: trace closure of the 3-braid (s1 s2^-1)^2. Rows y=0,2,4;
// crossings at x=-3,-1,1,3; two nested return arcs over the top.
FramedTubeKnot figure8_layout() {
    return from_grid({
        {-8, 0, 0},
        {-4, 0, 0},
        {-3.5, 0.5, 1},
        {-2.5, 1.5, 1},
        {-2, 2, 0},
        {0, 4, 0},
        {2, 4, 0},
        {2.5, 3.5, 1},
        {3.5, 2.5, 1},
        {4, 2, 0},
        {5, 2, 0},
        {5, 6, 0},
        {-5, 6, 0},
        {-5, 2, 0},
        {-4, 2, 0},
        {-2, 0, 0},
        {0, 0, 0},
        {0.5, 0.5, 1},
        {1.5, 1.5, 1},
        {2, 2, 0},
        {4, 4, 0},
        {4.25, 4, 0},
        {4.25, 5, 0},
        {-4.25, 5, 0},
        {-4.25, 4, 0},
        {-4, 4, 0},
        {-2, 4, 0},
        {-1.5, 3.5, 1},
        {-0.5, 2.5, 1},
        {0, 2, 0},
        {2, 0, 0},
        {4, 0, 0},
        {8, 0, 0},
    });
}

}  // namespace

FramedTubeKnot mirror_z(FramedTubeKnot f) {
    for (auto& p : f.core.v) p.z = -p.z;
    return f;
}

std::vector<std::string> catalog_names() {
    return {"unknot", "trefoil", "trefoil_mirror", "figure8",
            "figure8_mirror"};
}

FramedTubeKnot catalog_knot(const std::string& name) {
    if (name == "unknot") return unknot();
    // the raw trefoil layout is left-handed (writhe -3)
    if (name == "trefoil") return mirror_z(trefoil_layout());
    if (name == "trefoil_mirror") return trefoil_layout();
    if (name == "figure8") return figure8_layout();
    if (name == "figure8_mirror") return mirror_z(figure8_layout());
    throw parse_error("unknown catalog knot: " + name);
}

}  // namespace cubeknot
