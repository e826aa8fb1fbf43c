#ifndef SPINCONF_MINKOWSKI_HPP
#define SPINCONF_MINKOWSKI_HPP

#include <array>
#include <vector>

#include "spinconf/exactla.hpp"

namespace spinconf {

/// Mostly-plus Minkowski metric diag(-1, 1, ..., 1). Index raising and
/// lowering is always explicit through g(); generators are stored with
/// lower indices.
struct Metric {
    int n;
    explicit Metric(int n_) : n(n_) {}
    long g(int mu) const { return mu == 0 ? -1 : 1; }
    exactla::ExactScalar gs(int mu) const { return exactla::ExactScalar(g(mu)); }
    double gd(int mu) const { return mu == 0 ? -1.0 : 1.0; }
};

/// Signed permutations of (0,1,2,3); sign is the permutation parity.
struct Perm4 {
    std::array<int, 4> p;
    int sign;
};
const std::vector<Perm4>& permutations4();

}  // namespace spinconf

#endif
