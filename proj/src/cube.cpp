#include "cubeknot/cube.hpp"

#include "cubeknot/errors.hpp"

namespace cubeknot {

LittleCube::LittleCube(std::vector<AffineAxis> axes) : axes_(std::move(axes)) {
    require(!axes_.empty(), "little cube needs at least one axis");
    for (const auto& ax : axes_) {
        require(ax.a > 0, "little cube axis must be increasing (a > 0)");
        require(ax.a + rat_abs(ax.b) <= 1,
                "little cube must map I into I (a + |b| <= 1)");
    }
}

LittleCube LittleCube::identity(std::size_t dim) {
    return LittleCube(std::vector<AffineAxis>(dim, AffineAxis{Rat(1), Rat(0)}));
}

LittleCube LittleCube::after(const LittleCube& inner) const {
    require(dimension() == inner.dimension(),
            "cube composition dimension mismatch");
    std::vector<AffineAxis> out;
    out.reserve(axes_.size());
    for (std::size_t i = 0; i < axes_.size(); ++i)
        out.push_back(axes_[i].after(inner.axes_[i]));
    return LittleCube(std::move(out));
}

LittleCube LittleCube::drop_last_axis() const {
    require(dimension() >= 2, "cannot drop the only axis of a 1-cube");
    return LittleCube(
        std::vector<AffineAxis>(axes_.begin(), axes_.end() - 1));
}

bool LittleCube::interior_overlaps(const LittleCube& o) const {
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        // Open intervals (lo,hi) disjoint on some axis => interiors disjoint.
        if (axes_[i].lo() >= o.axes_[i].hi() ||
            o.axes_[i].lo() >= axes_[i].hi())
            return false;
    }
    return true;
}

bool cube_less(const LittleCube& a, const LittleCube& b) {
    for (std::size_t i = 0; i < std::min(a.dimension(), b.dimension()); ++i) {
        if (a.axis(i).b != b.axis(i).b) return a.axis(i).b < b.axis(i).b;
        if (a.axis(i).a != b.axis(i).a) return a.axis(i).a < b.axis(i).a;
    }
    return a.dimension() < b.dimension();
}

CubeConfig::CubeConfig(std::size_t dim, std::vector<LittleCube> cubes)
    : dim_(dim), cubes_(std::move(cubes)) {
    require(dim_ >= 1, "configuration dimension must be positive");
    for (const auto& c : cubes_)
        require(c.dimension() == dim_, "configuration cube dimension mismatch");
    for (std::size_t i = 0; i < cubes_.size(); ++i)
        for (std::size_t j = i + 1; j < cubes_.size(); ++j)
            require(!cubes_[i].interior_overlaps(cubes_[j]),
                    "configuration cubes must have disjoint interiors");
}

CubeConfig compose_operad(const CubeConfig& outer,
                          const std::vector<CubeConfig>& inners) {
    require(outer.arity() == inners.size(),
            "operad composition arity mismatch");
    std::vector<LittleCube> out;
    for (std::size_t m = 0; m < outer.arity(); ++m) {
        require(inners[m].dimension() == outer.dimension(),
                "operad composition dimension mismatch");
        for (std::size_t i = 0; i < inners[m].arity(); ++i)
            out.push_back(outer.cube(m).after(inners[m].cube(i)));
    }
    return CubeConfig(outer.dimension(), std::move(out));
}

CubeConfig permute(const CubeConfig& config, const Perm& perm) {
    require(perm.size() == config.arity(), "permutation arity mismatch");
    require(perm_valid(perm), "not a permutation");
    std::vector<LittleCube> out;
    out.reserve(config.arity());
    for (std::size_t i = 0; i < perm.size(); ++i)
        out.push_back(config.cube(perm[i]));
    return CubeConfig(config.dimension(), std::move(out));
}

ProjectionData project(const CubeConfig& config) {
    require(config.dimension() >= 2,
            "projection needs dimension >= 2 (no axis to drop)");
    ProjectionData pd;
    pd.pi.reserve(config.arity());
    pd.t.reserve(config.arity());
    for (const auto& c : config.cubes()) {
        pd.pi.push_back(c.drop_last_axis());
        pd.t.push_back(c.axis(c.dimension() - 1).lo());
    }
    return pd;
}

CubeConfig base_config(std::size_t n) {
    std::vector<LittleCube> cubes;
    cubes.reserve(n);
    const Rat den(1, 2 * static_cast<long>(n) + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        AffineAxis x{den, Rat(-1) + Rat(4 * static_cast<long>(i) - 1) * den};
        AffineAxis y{den, den};
        cubes.push_back(LittleCube({x, y}));
    }
    return CubeConfig(2, std::move(cubes));
}

}  // namespace cubeknot
