#include "swarmpath/environment.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "swarmpath/errors.hpp"

namespace swarmpath {

std::optional<Rect> intersection(const Rect& a, const Rect& b) {
    Rect r{{std::max(a.min_corner.x, b.min_corner.x), std::max(a.min_corner.y, b.min_corner.y)},
           {std::min(a.max_corner.x, b.max_corner.x), std::min(a.max_corner.y, b.max_corner.y)}};
    if (!r.well_ordered()) return std::nullopt;
    return r;
}

bool segment_intersects(const Rect& r, Vec2 a, Vec2 b) {
    if (r.contains(a) || r.contains(b)) return true;

    // Liang-Barsky slab clipping of the parameter interval [0, 1].
    double t_enter = 0.0;
    double t_exit = 1.0;
    const auto clip = [&](double origin, double delta, double lo, double hi) {
        if (delta == 0.0) return origin >= lo && origin <= hi;
        double t0 = (lo - origin) / delta;
        double t1 = (hi - origin) / delta;
        if (t0 > t1) std::swap(t0, t1);
        t_enter = std::max(t_enter, t0);
        t_exit = std::min(t_exit, t1);
        return t_enter <= t_exit;
    };
    return clip(a.x, b.x - a.x, r.min_corner.x, r.max_corner.x) &&
           clip(a.y, b.y - a.y, r.min_corner.y, r.max_corner.y);
}

std::vector<Rect> Environment::effective_obstacles() const {
    std::vector<Rect> out;
    out.reserve(obstacles.size());
    for (const Rect& o : obstacles) {
        if (auto clipped = intersection(o.grown(wall_margin), bounds)) out.push_back(*clipped);
    }
    return out;
}

void Environment::validate() const {
    if (!is_finite(bounds.min_corner) || !is_finite(bounds.max_corner) ||
        !(bounds.min_corner.x < bounds.max_corner.x) ||
        !(bounds.min_corner.y < bounds.max_corner.y)) {
        throw InvalidInput("bounds must have positive area");
    }
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const Rect& o = obstacles[i];
        if (!is_finite(o.min_corner) || !is_finite(o.max_corner) || !o.well_ordered()) {
            throw InvalidInput("obstacle " + std::to_string(i) +
                               ": max_corner must not be less than min_corner");
        }
    }
    if (!std::isfinite(wall_margin) || wall_margin < 0.0) {
        throw InvalidInput("wall_margin must be finite and >= 0");
    }
}

bool contains_free(const Environment& env, Vec2 p) {
    if (!env.bounds.contains(p)) return false;
    for (const Rect& o : env.obstacles) {
        if (o.grown(env.wall_margin).contains(p)) return false;
    }
    return true;
}

bool segment_blocked(const Environment& env, Vec2 a, Vec2 b) {
    // Bounds are convex, so the segment stays inside iff both ends do.
    if (!env.bounds.contains(a) || !env.bounds.contains(b)) return true;
    for (const Rect& o : env.obstacles) {
        if (segment_intersects(o.grown(env.wall_margin), a, b)) return true;
    }
    return false;
}

Particle apply_move(const Environment& env, Particle p, Vec2 proposed_velocity,
                    const MovePolicy& policy) {
    const Vec2 candidate = propose_position(p.position, proposed_velocity);
    bool accepted = contains_free(env, candidate);
    if (accepted && policy.collision_mode == CollisionMode::segment_reject) {
        accepted = !segment_blocked(env, p.position, candidate);
    }
    if (accepted) {
        p.position = candidate;
        p.velocity = proposed_velocity;
    } else {
        p.velocity = policy.on_reject == OnReject::keep_velocity ? proposed_velocity : Vec2{};
    }
    return p;
}

Environment inflate(Environment env, double margin) {
    if (!std::isfinite(margin) || margin < 0.0) {
        throw InvalidInput("inflate: margin must be finite and >= 0");
    }
    env.wall_margin = margin;
    return env;
}

}  // namespace swarmpath
