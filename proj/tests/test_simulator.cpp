#include <doctest.h>

#include <random>

#include "swarmpath/errors.hpp"
#include "swarmpath/simulator.hpp"

using namespace swarmpath;

namespace {

Scenario open_field() {
    Scenario sc;
    sc.start = {-70, 80};
    sc.target = {70, -70};
    sc.params = {50, 0.8, 0.65, 0.9, kUnlimitedSpeed};
    sc.seed = 42;
    return sc;
}

void check_run_invariants(const Scenario& sc, const RunResult& r) {
    REQUIRE(r.gbest_path.size() == r.steps + 1);
    REQUIRE(r.error_series.size() == r.steps + 1);
    REQUIRE(r.trace.size() == r.steps + 1);
    for (std::size_t i = 1; i < r.error_series.size(); ++i) {
        REQUIRE(r.error_series[i] <= r.error_series[i - 1]);
    }
    if (r.converged) REQUIRE(r.final_error() <= sc.stop.epsilon);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        for (std::size_t j = 0; j < r.trace[i].size(); ++j) {
            REQUIRE(contains_free(sc.environment, r.trace[i][j]));
            if (i > 0 && sc.policy.collision_mode == CollisionMode::segment_reject) {
                REQUIRE_FALSE(segment_blocked(sc.environment, r.trace[i - 1][j], r.trace[i][j]));
            }
        }
    }
    REQUIRE(r.update_draws == 2 * sc.params.n_particles * r.steps);
}

}  // namespace

TEST_CASE("step") {
    SUBCASE("a still particle at the target stays put") {
        Scenario sc = open_field();
        sc.params = {1, 0, 0, 0, kUnlimitedSpeed};
        sc.start = sc.target;
        RandomSource rng(1);
        const Swarm before = init_swarm(sc.params, sc.start, sc.target, sc.environment, rng, 0.0);
        const Swarm after = step(before, sc, rng);
        CHECK(after == before);
    }
    SUBCASE("a walled-in chamber refuses every move") {
        Scenario sc = open_field();
        sc.start = {0, 0};
        sc.environment.obstacles = {{{-6, -6}, {6, -5}},
                                    {{-6, 5}, {6, 6}},
                                    {{-6, -6}, {-5, 6}},
                                    {{5, -6}, {6, 6}}};
        sc.environment.wall_margin = 0.5;
        sc.params = {20, 0.9, 2.0, 2.0, kUnlimitedSpeed};
        RandomSource rng(3);
        Swarm swarm = init_swarm(sc.params, sc.start, sc.target, sc.environment, rng, 4.0);
        // Give every particle a velocity large enough to leave the chamber.
        for (Particle& p : swarm.particles) p.velocity = {40, -40};
        const Swarm after = step(swarm, sc, rng);
        for (std::size_t i = 0; i < swarm.particles.size(); ++i) {
            CHECK(after.particles[i].position == swarm.particles[i].position);
        }
    }
    SUBCASE("global best never gets worse") {
        std::mt19937_64 gen(10);
        std::uniform_real_distribution<double> coord(-90, 90);
        std::uniform_real_distribution<double> coef(0, 2);
        std::uniform_int_distribution<int> count(1, 30);
        for (int trial = 0; trial < 1000; ++trial) {
            Scenario sc;
            sc.environment.obstacles = {{{-5, -40}, {5, 40}}};
            do {
                sc.start = {coord(gen), coord(gen)};
            } while (!contains_free(sc.environment, sc.start));
            do {
                sc.target = {coord(gen), coord(gen)};
            } while (!contains_free(sc.environment, sc.target));
            sc.params = {static_cast<std::size_t>(count(gen)), coef(gen), coef(gen), coef(gen),
                         kUnlimitedSpeed};
            sc.policy.collision_mode =
                trial % 2 ? CollisionMode::point_reject : CollisionMode::segment_reject;
            RandomSource rng(static_cast<std::uint64_t>(trial));
            Swarm swarm = init_swarm(sc.params, sc.start, sc.target, sc.environment, rng, 0.0);
            for (int k = 0; k < 5; ++k) {
                const double before = swarm.global_best_fitness;
                const std::uint64_t draws = rng.draws();
                swarm = step(std::move(swarm), sc, rng);
                REQUIRE(swarm.global_best_fitness <= before);
                REQUIRE(rng.draws() - draws == 2 * sc.params.n_particles);
            }
        }
    }
}

TEST_CASE("converged uses an inclusive radius") {
    Swarm swarm;
    swarm.particles.push_back({{3, 4}, {}, {3, 4}, 25});
    swarm = update_global_best(swarm);
    CHECK(converged(swarm, {0, 0}, 5.0));
    CHECK_FALSE(converged(swarm, {0, 0}, 2.5));
    swarm.global_best_position = {1, 1};
    CHECK(converged(swarm, {1, 1}, 1e-12));
}

TEST_CASE("run") {
    SUBCASE("start on the target converges immediately") {
        Scenario sc = open_field();
        sc.start = sc.target;
        sc.spread = 0;
        const RunResult r = run(sc);
        CHECK(r.converged);
        CHECK(r.steps == 0);
        CHECK(r.error_series == std::vector<double>{0.0});
        CHECK(r.update_draws == 0);
    }
    SUBCASE("deterministic") {
        const Scenario sc = open_field();
        CHECK(run(sc) == run(sc));
    }
    SUBCASE("seed changes the run") {
        Scenario a = open_field();
        Scenario b = open_field();
        b.seed = 43;
        CHECK_FALSE(run(a) == run(b));
    }
    SUBCASE("blocked start is a validation error") {
        Scenario sc = open_field();
        sc.environment.obstacles = {{{-75, 75}, {-65, 85}}};
        CHECK_THROWS_WITH_AS(run(sc), doctest::Contains("start"), ValidationError);
    }
    SUBCASE("blocked target is a validation error") {
        Scenario sc = open_field();
        sc.target = {150, 0};
        CHECK_THROWS_WITH_AS(run(sc), doctest::Contains("target"), ValidationError);
    }
    SUBCASE("non-converging run stops at max_iterations") {
        Scenario sc = open_field();
        sc.params.c1 = 0;
        sc.params.c2 = 0;
        sc.stop.max_iterations = 7;
        const RunResult r = run(sc);
        CHECK_FALSE(r.converged);
        CHECK(r.steps == 7);
        check_run_invariants(sc, r);
    }
    SUBCASE("invariants hold on walled runs under both policies") {
        for (auto mode : {CollisionMode::point_reject, CollisionMode::segment_reject}) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                Scenario sc = open_field();
                sc.environment.obstacles = {{{-30, -40}, {-26, 40}}, {{20, -60}, {24, 0}}};
                sc.policy.collision_mode = mode;
                sc.seed = seed;
                sc.stop.max_iterations = 150;
                check_run_invariants(sc, run(sc));
            }
        }
    }
}

TEST_CASE("open field converges for most seeds") {
    Scenario sc = open_field();
    int converged_runs = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        sc.seed = seed;
        const RunResult r = run(sc);
        check_run_invariants(sc, r);
        converged_runs += r.converged;
    }
    CHECK(converged_runs >= 95);
}

TEST_CASE("extract_path") {
    RunResult r;
    r.gbest_path = {{0, 0}, {0, 0}, {1, 1}};
    CHECK(extract_path(r) == std::vector<Vec2>{{0, 0}, {1, 1}});

    r.gbest_path = {{2, 3}};
    CHECK(extract_path(r) == r.gbest_path);

    r.gbest_path = {{0, 0}, {1, 1}, {1, 1}, {0, 0}};
    CHECK(extract_path(r) == std::vector<Vec2>{{0, 0}, {1, 1}, {0, 0}});

    Scenario sc = open_field();
    sc.stop.max_iterations = 3;
    const RunResult short_run = run(sc);
    REQUIRE_FALSE(short_run.converged);
    CHECK_FALSE(extract_path(short_run).empty());
}
