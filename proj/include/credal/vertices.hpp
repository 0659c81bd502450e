#pragma once

#include "credal/lp.hpp"

#include <cstddef>
#include <vector>

namespace credal::lp {

/// Size limits for exhaustive basis enumeration. `max_constraints` counts
/// explicit constraint rows, not sign restrictions.
struct VertexCap {
    std::size_t max_variables = 8;
    std::size_t max_constraints = 24;
};

using Point = std::vector<Scalar>;

/// Every vertex of `region`, exactly and without duplicates, in
/// lexicographic order. Empty iff the region has no vertex (for a bounded
/// region: iff it is infeasible). Throws CapacityError when `region` is
/// larger than `cap`.
std::vector<Point> enumerate_vertices(const Polytope& region, const VertexCap& cap = {});

}  // namespace credal::lp
