#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bettilab/point_cloud.hpp"
#include "bettilab/simplicial_complex.hpp"

namespace bettilab {

// Pairs (i, j), i < j, at distance <= threshold (+containment tolerance).
// The serial version is the O(n^2) reference; the grid version hashes cells
// of side `threshold` and is parallelized over points.
std::vector<std::pair<std::int32_t, std::int32_t>> geometric_edges_serial(
    const PointCloud& cloud, double threshold);
std::vector<std::pair<std::int32_t, std::int32_t>> geometric_edges(
    const PointCloud& cloud, double threshold);

// Adjacency lists of the distance-<=threshold graph, sorted, symmetric.
std::vector<std::vector<std::int32_t>> geometric_adjacency(const PointCloud& cloud,
                                                           double threshold);

// Cech complex: a simplex enters iff the minimal enclosing ball of its
// vertices has radius <= cloud.radius (radius within miniball_tolerance of r
// counts as included).  Built dimension by dimension up to max_dim.
SimplicialComplex build_cech_complex(const PointCloud& cloud, int max_dim);

// Same construction on a subset of the points; simplices carry positions
// into `index` as vertex labels (0-based within the subset).
SimplicialComplex build_cech_complex_subset(const PointCloud& cloud,
                                            const std::vector<std::int32_t>& index,
                                            int max_dim);

}  // namespace bettilab
