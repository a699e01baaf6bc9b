#pragma once

#include <cstddef>
#include <vector>

#include "cubeknot/permutation.hpp"
#include "cubeknot/rational.hpp"

namespace cubeknot {

// One increasing affine self-map l(t) = a*t + b of I = [-1,1].
struct AffineAxis {
    Rat a, b;

    Rat lo() const { return b - a; }  // l(-1)
    Rat hi() const { return b + a; }  // l(+1)
    Rat operator()(const Rat& t) const { return a * t + b; }
    Rat inverse(const Rat& y) const { return (y - b) / a; }

    // Composite map this(inner(t)).
    AffineAxis after(const AffineAxis& inner) const {
        return {a * inner.a, a * inner.b + b};
    }

    bool operator==(const AffineAxis& o) const { return a == o.a && b == o.b; }
};

// Product of k increasing affine self-maps of I, mapping I^k into I^k.
class LittleCube {
public:
    explicit LittleCube(std::vector<AffineAxis> axes);

    static LittleCube identity(std::size_t dim);

    std::size_t dimension() const { return axes_.size(); }
    const AffineAxis& axis(std::size_t i) const { return axes_[i]; }
    const std::vector<AffineAxis>& axes() const { return axes_; }

    // Affine substitution (*this) after inner, the operad's composite.
    LittleCube after(const LittleCube& inner) const;

    // Drops the last axis.
    LittleCube drop_last_axis() const;

    bool operator==(const LittleCube& o) const { return axes_ == o.axes_; }
    bool operator!=(const LittleCube& o) const { return !(*this == o); }

    // Open-interior overlap on every axis.
    bool interior_overlaps(const LittleCube& o) const;

private:
    std::vector<AffineAxis> axes_;
};

// Canonical total order used for normal forms: lexicographic on
// (axis1.b, axis1.a, axis2.b, axis2.a, ...).
bool cube_less(const LittleCube& a, const LittleCube& b);

// Ordered tuple of j little k-cubes with pairwise disjoint open images.
class CubeConfig {
public:
    CubeConfig(std::size_t dim, std::vector<LittleCube> cubes);

    static CubeConfig empty(std::size_t dim) { return CubeConfig(dim, {}); }

    std::size_t dimension() const { return dim_; }
    std::size_t arity() const { return cubes_.size(); }
    const LittleCube& cube(std::size_t i) const { return cubes_[i]; }
    const std::vector<LittleCube>& cubes() const { return cubes_; }

    bool operator==(const CubeConfig& o) const {
        return dim_ == o.dim_ && cubes_ == o.cubes_;
    }
    bool operator!=(const CubeConfig& o) const { return !(*this == o); }

private:
    std::size_t dim_;
    std::vector<LittleCube> cubes_;
};

struct ProjectionData {
    std::vector<LittleCube> pi;  // last axis dropped; may overlap
    std::vector<Rat> t;          // t_i = l_{i,k}(-1)
};

// Structure map: substitutes inners[m] into cube m of outer.
CubeConfig compose_operad(const CubeConfig& outer,
                          const std::vector<CubeConfig>& inners);

// Right action: cube i of the result is cube perm[i] of config.
CubeConfig permute(const CubeConfig& config, const Perm& perm);

// Forgets the last axis of each cube; rejects dimension-1 configs.
ProjectionData project(const CubeConfig& config);

// The base configuration Q_1..Q_n:
// Q_i = [-1+(4i-2)/(2n+1), -1+4i/(2n+1)] x [0, 2/(2n+1)].
CubeConfig base_config(std::size_t n);

}  // namespace cubeknot
