#pragma once

// Dense-sampling segment test used to check the exact slab test. A point is
// blocked when it leaves the bounds or lies in a closed inflated obstacle.

#include <algorithm>
#include <cmath>
#include <vector>

#include "swarmpath/environment.hpp"

namespace oracle {

inline bool point_blocked(const swarmpath::Environment& env, double x, double y) {
    const auto& b = env.bounds;
    if (x < b.min_corner.x || x > b.max_corner.x || y < b.min_corner.y || y > b.max_corner.y) {
        return true;
    }
    const double m = env.wall_margin;
    for (const auto& o : env.obstacles) {
        if (x >= o.min_corner.x - m && x <= o.max_corner.x + m && y >= o.min_corner.y - m &&
            y <= o.max_corner.y + m) {
            return true;
        }
    }
    return false;
}

// Samples the segment every `step` units of arc length, both endpoints included.
inline bool segment_blocked_sampled(const swarmpath::Environment& env, swarmpath::Vec2 a,
                                    swarmpath::Vec2 b, double step = 1e-3) {
    const double length = std::hypot(b.x - a.x, b.y - a.y);
    const long n = std::max(1L, static_cast<long>(std::ceil(length / step)));
    for (long i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n);
        if (point_blocked(env, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))) return true;
    }
    return false;
}

}  // namespace oracle
