#include "swarmpath/swarm_core.hpp"

#include <cmath>
#include <string>

#include "swarmpath/environment.hpp"
#include "swarmpath/errors.hpp"

namespace swarmpath {

void PsoParams::validate() const {
    if (n_particles < 1) throw InvalidInput("n_particles must be >= 1");
    auto check = [](double value, const char* name) {
        if (!std::isfinite(value) || value < 0.0) {
            throw InvalidInput(std::string(name) + " must be finite and >= 0");
        }
    };
    check(w, "w");
    check(c1, "c1");
    check(c2, "c2");
    if (std::isnan(v_max) || v_max <= 0.0) {
        throw InvalidInput("v_max must be > 0 or unlimited");
    }
}

double fitness(Vec2 position, Vec2 target) {
    if (!is_finite(position) || !is_finite(target)) {
        throw InvalidInput("fitness: non-finite coordinate");
    }
    const double dx = target.x - position.x;
    const double dy = target.y - position.y;
    return dx * dx + dy * dy;
}

Vec2 update_velocity(const Particle& p, Vec2 global_best, const PsoParams& params,
                     double r1, double r2) {
    Vec2 v = params.w * p.velocity + (params.c1 * r1) * (p.best_position - p.position) +
             (params.c2 * r2) * (global_best - p.position);
    if (params.speed_limited()) {
        const double speed = norm(v);
        if (speed > params.v_max) v = (params.v_max / speed) * v;
    }
    return v;
}

Vec2 update_velocity(const Particle& p, Vec2 global_best, const PsoParams& params,
                     RandomSource& rng) {
    const double r1 = rng.uniform();
    const double r2 = rng.uniform();
    return update_velocity(p, global_best, params, r1, r2);
}

Particle update_personal_best(Particle p, Vec2 target) {
    const double f = fitness(p.position, target);
    if (f < p.best_fitness) {
        p.best_position = p.position;
        p.best_fitness = f;
    }
    return p;
}

Swarm update_global_best(Swarm swarm) {
    if (swarm.particles.empty()) throw InvalidState("update_global_best: empty swarm");
    std::size_t best = 0;
    for (std::size_t i = 1; i < swarm.particles.size(); ++i) {
        if (swarm.particles[i].best_fitness < swarm.particles[best].best_fitness) best = i;
    }
    swarm.global_best_position = swarm.particles[best].best_position;
    swarm.global_best_fitness = swarm.particles[best].best_fitness;
    return swarm;
}

Swarm init_swarm(const PsoParams& params, Vec2 start, Vec2 target, const Environment& env,
                 RandomSource& rng, double spread) {
    params.validate();
    if (!std::isfinite(spread) || spread < 0.0) {
        throw InvalidInput("spread must be finite and >= 0");
    }
    if (!is_finite(start) || !is_finite(target)) {
        throw InvalidInput("init_swarm: non-finite start or target");
    }

    Swarm swarm;
    swarm.particles.reserve(params.n_particles);
    for (std::size_t i = 0; i < params.n_particles; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kMaxPlacementAttempts && !placed; ++attempt) {
            const double ux = rng.uniform();
            const double uy = rng.uniform();
            const Vec2 candidate{start.x + spread * (2.0 * ux - 1.0),
                                 start.y + spread * (2.0 * uy - 1.0)};
            if (!contains_free(env, candidate)) continue;
            swarm.particles.push_back(
                Particle{candidate, Vec2{}, candidate, fitness(candidate, target)});
            placed = true;
        }
        if (!placed) {
            throw PlacementError(i, "could not place particle " + std::to_string(i) +
                                        " in free space after " +
                                        std::to_string(kMaxPlacementAttempts) + " attempts");
        }
    }
    return update_global_best(std::move(swarm));
}

}  // namespace swarmpath
