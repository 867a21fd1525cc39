#pragma once

#include <cstddef>
#include <cstdint>

#include "bilipkit/point.hpp"

namespace bilipkit::fixtures {

/// n points t u with t log-spaced in [t_min, t_max] along a seeded random unit u.
PointCloud ray_cloud(std::size_t dim, std::size_t n, double t_min, double t_max,
                     std::uint64_t seed = 0);

/// {(t, offset) : t log-spaced in [t_min, t_max]}; its cone at infinity is the ray R+ (1, 0).
PointCloud shifted_line_cloud(std::size_t n, double t_min, double t_max, double offset = 1.0);

/// Planar log-spiral r (cos 2 pi log10 r, sin 2 pi log10 r), r log-spaced in [r_min, r_max].
PointCloud spiral_cloud(std::size_t n, double r_min, double r_max);

/// Log-uniform radii in [r_min, r_max] times uniform directions.
PointCloud random_cloud(std::size_t dim, std::size_t n, double r_min, double r_max,
                        std::uint64_t seed);

/// Uniform directions on the unit sphere S^{dim-1}.
PointCloud sphere_cloud(std::size_t dim, std::size_t n, std::uint64_t seed);

/// Seeded uniform unit vector in R^dim.
Point random_unit(std::size_t dim, std::uint64_t seed);

}  // namespace bilipkit::fixtures
