#pragma once

#include <optional>
#include <vector>

#include "swarmpath/swarm_core.hpp"
#include "swarmpath/vec2.hpp"

namespace swarmpath {

/// Closed axis-aligned rectangle.
struct Rect {
    Vec2 min_corner;
    Vec2 max_corner;

    bool well_ordered() const {
        return min_corner.x <= max_corner.x && min_corner.y <= max_corner.y;
    }
    bool contains(Vec2 p) const {
        return p.x >= min_corner.x && p.x <= max_corner.x && p.y >= min_corner.y &&
               p.y <= max_corner.y;
    }
    Rect grown(double margin) const {
        return {{min_corner.x - margin, min_corner.y - margin},
                {max_corner.x + margin, max_corner.y + margin}};
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Clipped intersection, or nullopt when the rectangles are disjoint.
std::optional<Rect> intersection(const Rect& a, const Rect& b);

/// True iff the closed segment a-b touches the closed rectangle r.
bool segment_intersects(const Rect& r, Vec2 a, Vec2 b);

inline Rect default_bounds() { return {{-100.0, -100.0}, {100.0, 100.0}}; }

struct Environment {
    Rect bounds = default_bounds();
    std::vector<Rect> obstacles;
    double wall_margin = 0.0;

    /// Obstacles grown by wall_margin and clipped to bounds. Obstacles that
    /// fall entirely outside bounds are dropped.
    std::vector<Rect> effective_obstacles() const;

    /// Throws InvalidInput if bounds are degenerate, an obstacle is
    /// inverted, or the margin is negative.
    void validate() const;

    friend bool operator==(const Environment&, const Environment&) = default;
};

enum class CollisionMode { point_reject, segment_reject };
enum class OnReject { keep_velocity, zero_velocity };

struct MovePolicy {
    CollisionMode collision_mode = CollisionMode::segment_reject;
    OnReject on_reject = OnReject::keep_velocity;

    friend bool operator==(const MovePolicy&, const MovePolicy&) = default;
};

/// Inside bounds (inclusive) and outside every inflated obstacle, whose
/// boundary counts as blocked.
bool contains_free(const Environment& env, Vec2 p);

/// Exact test: the closed segment leaves bounds or touches an inflated obstacle.
bool segment_blocked(const Environment& env, Vec2 a, Vec2 b);

/// Moves p by proposed_velocity if the policy allows it. A rejected move
/// leaves the position alone; the velocity is kept or zeroed per on_reject.
Particle apply_move(const Environment& env, Particle p, Vec2 proposed_velocity,
                    const MovePolicy& policy);

/// Copy of env with wall_margin replaced. Negative or non-finite margin is InvalidInput.
Environment inflate(Environment env, double margin);

}  // namespace swarmpath
