#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "cubeknot/errors.hpp"

namespace cubeknot {

// 0-based permutation of {0..n-1}; p[i] = image of i.
using Perm = std::vector<std::size_t>;

inline Perm perm_identity(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline bool perm_valid(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (auto v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

inline bool perm_is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

inline Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
    return q;
}

// "p then q": (p * q)(i) = q(p(i)).
inline Perm perm_then(const Perm& p, const Perm& q) {
    require(p.size() == q.size(), "permutation size mismatch");
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

inline Perm perm_transposition(std::size_t n, std::size_t i, std::size_t j) {
    Perm p = perm_identity(n);
    p[i] = j;
    p[j] = i;
    return p;
}

}  // namespace cubeknot
