#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "swarmpath/environment.hpp"
#include "swarmpath/random.hpp"
#include "swarmpath/swarm_core.hpp"

namespace swarmpath {

struct StopRules {
    double epsilon = 1.0;  // convergence radius around the target
    std::size_t max_iterations = 500;

    friend bool operator==(const StopRules&, const StopRules&) = default;
};

struct Scenario {
    Environment environment;
    Vec2 start;
    Vec2 target;
    PsoParams params;
    MovePolicy policy;
    StopRules stop;
    std::uint64_t seed = 0;
    double spread = 10.0;  // half-width of the initial placement square

    /// Throws ValidationError naming the violated invariant.
    void validate() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct RunResult {
    bool converged = false;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    // trace[i][j] is particle j's position after iteration i (i = 0 is the initial swarm).
    std::vector<std::vector<Vec2>> trace;
    std::vector<Vec2> gbest_path;
    std::vector<double> error_series;
    // Uniform draws consumed by the iteration loop, excluding initialization.
    std::uint64_t update_draws = 0;

    double final_error() const { return error_series.empty() ? 0.0 : error_series.back(); }

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// One synchronous sweep: every particle, in index order, gets a new velocity
/// against the global best as it stood before the sweep, moves under the
/// scenario's policy and refreshes its personal best. The global best is
/// recomputed once at the end. Consumes exactly 2 * N draws.
Swarm step(Swarm swarm, const Scenario& scenario, RandomSource& rng);

/// Global best within epsilon (inclusive) of the target.
bool converged(const Swarm& swarm, Vec2 target, double epsilon);

/// Validates the scenario, initializes from its seed and iterates until
/// convergence or max_iterations. Iteration 0 is recorded before any update.
RunResult run(const Scenario& scenario);

/// gbest_path with consecutive duplicates collapsed.
std::vector<Vec2> extract_path(const RunResult& result);

}  // namespace swarmpath
