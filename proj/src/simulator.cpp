#include "swarmpath/simulator.hpp"

#include <cmath>

#include "swarmpath/errors.hpp"

namespace swarmpath {

void Scenario::validate() const {
    try {
        environment.validate();
        params.validate();
    } catch (const InvalidInput& e) {
        throw ValidationError(e.what());
    }
    if (!is_finite(start)) throw ValidationError("start must be finite");
    if (!is_finite(target)) throw ValidationError("target must be finite");
    if (!contains_free(environment, start)) {
        throw ValidationError("start must be a free point of the environment");
    }
    if (!contains_free(environment, target)) {
        throw ValidationError("target must be a free point of the environment");
    }
    if (!std::isfinite(stop.epsilon) || stop.epsilon <= 0.0) {
        throw ValidationError("stop.epsilon must be finite and > 0");
    }
    if (stop.max_iterations < 1) throw ValidationError("stop.max_iterations must be >= 1");
    if (!std::isfinite(spread) || spread < 0.0) {
        throw ValidationError("spread must be finite and >= 0");
    }
}

Swarm step(Swarm swarm, const Scenario& scenario, RandomSource& rng) {
    const Vec2 global_best = swarm.global_best_position;
    for (Particle& p : swarm.particles) {
        const Vec2 v = update_velocity(p, global_best, scenario.params, rng);
        p = apply_move(scenario.environment, p, v, scenario.policy);
        p = update_personal_best(p, scenario.target);
    }
    return update_global_best(std::move(swarm));
}

bool converged(const Swarm& swarm, Vec2 target, double epsilon) {
    // Same quantity as the recorded error series, so converged implies final error <= epsilon.
    return std::sqrt(fitness(swarm.global_best_position, target)) <= epsilon;
}

namespace {

std::vector<Vec2> positions(const Swarm& swarm) {
    std::vector<Vec2> out;
    out.reserve(swarm.particles.size());
    for (const Particle& p : swarm.particles) out.push_back(p.position);
    return out;
}

void record(RunResult& result, const Swarm& swarm) {
    result.trace.push_back(positions(swarm));
    result.gbest_path.push_back(swarm.global_best_position);
    result.error_series.push_back(std::sqrt(swarm.global_best_fitness));
}

}  // namespace

RunResult run(const Scenario& scenario) {
    scenario.validate();

    RandomSource rng(scenario.seed);
    Swarm swarm = init_swarm(scenario.params, scenario.start, scenario.target,
                             scenario.environment, rng, scenario.spread);
    const std::uint64_t init_draws = rng.draws();

    RunResult result;
    result.seed = scenario.seed;
    result.epsilon = scenario.stop.epsilon;
    record(result, swarm);

    result.converged = converged(swarm, scenario.target, scenario.stop.epsilon);
    while (!result.converged && result.steps < scenario.stop.max_iterations) {
        swarm = step(std::move(swarm), scenario, rng);
        ++result.steps;
        record(result, swarm);
        result.converged = converged(swarm, scenario.target, scenario.stop.epsilon);
    }
    result.update_draws = rng.draws() - init_draws;
    return result;
}

std::vector<Vec2> extract_path(const RunResult& result) {
    std::vector<Vec2> path;
    for (const Vec2& p : result.gbest_path) {
        if (path.empty() || !(path.back() == p)) path.push_back(p);
    }
    return path;
}

}  // namespace swarmpath
