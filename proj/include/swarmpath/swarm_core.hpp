#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "swarmpath/random.hpp"
#include "swarmpath/vec2.hpp"

namespace swarmpath {

struct Environment;

struct Particle {
    Vec2 position;
    Vec2 velocity;
    Vec2 best_position;
    double best_fitness = 0.0;

    friend bool operator==(const Particle&, const Particle&) = default;
};

struct Swarm {
    std::vector<Particle> particles;
    Vec2 global_best_position;
    double global_best_fitness = 0.0;

    friend bool operator==(const Swarm&, const Swarm&) = default;
};

inline constexpr double kUnlimitedSpeed = std::numeric_limits<double>::infinity();

struct PsoParams {
    std::size_t n_particles = 25;
    double w = 0.9;   // inertia weight
    double c1 = 0.6;  // attraction to the particle's own best
    double c2 = 0.65; // attraction to the swarm's best
    double v_max = kUnlimitedSpeed;

    bool speed_limited() const { return v_max != kUnlimitedSpeed; }

    /// Throws InvalidInput naming the offending field.
    void validate() const;

    friend bool operator==(const PsoParams&, const PsoParams&) = default;
};

/// Squared Euclidean distance to the target. Lower is better.
double fitness(Vec2 position, Vec2 target);

/// Inertia plus cognitive and social attraction with caller-supplied r1, r2,
/// then scaled down to v_max by norm (direction preserved) when limited.
Vec2 update_velocity(const Particle& p, Vec2 global_best, const PsoParams& params,
                     double r1, double r2);

/// Same as above; draws r1 then r2 from rng. Always consumes exactly two draws.
Vec2 update_velocity(const Particle& p, Vec2 global_best, const PsoParams& params,
                     RandomSource& rng);

inline Vec2 propose_position(Vec2 position, Vec2 velocity) { return position + velocity; }

/// Replaces the personal best only on strict improvement; ties keep the incumbent.
Particle update_personal_best(Particle p, Vec2 target);

/// Sets the global best to the personal best with the lowest fitness,
/// lowest index on ties. Throws InvalidState on an empty swarm.
Swarm update_global_best(Swarm swarm);

/// Places params.n_particles particles uniformly in the square of half-width
/// `spread` around `start`, resampling any draw that lands outside free space
/// (at most kMaxPlacementAttempts per particle). Velocities start at zero.
Swarm init_swarm(const PsoParams& params, Vec2 start, Vec2 target, const Environment& env,
                 RandomSource& rng, double spread);

inline constexpr int kMaxPlacementAttempts = 1000;

}  // namespace swarmpath
