#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "swarmpath/simulator.hpp"

namespace swarmpath {

struct RunEntry {
    std::uint64_t seed = 0;
    bool converged = false;
    std::size_t steps = 0;
    double final_error = 0.0;

    friend bool operator==(const RunEntry&, const RunEntry&) = default;
};

/// Step-count distribution over a batch of runs. Step statistics cover
/// converged runs only and are empty when none converged.
struct ReplicateReport {
    std::string scenario_id;
    std::size_t runs = 0;
    std::size_t converged_count = 0;
    std::optional<std::size_t> steps_min;
    std::optional<double> steps_median;
    std::optional<std::size_t> steps_max;
    std::optional<double> steps_mean;
    std::vector<std::uint64_t> failure_seeds;  // ascending
    std::vector<RunEntry> entries;             // ordered by seed

    friend bool operator==(const ReplicateReport&, const ReplicateReport&) = default;
};

/// Median of an even count is the lower of the two middle values.
/// Throws InvalidInput on an empty list.
ReplicateReport aggregate(const std::vector<RunResult>& results, std::string scenario_id = {});

/// Runs `runs` copies of the scenario with seeds seed_base .. seed_base + runs - 1,
/// spread over `jobs` threads (0 = hardware concurrency). Results are ordered by seed.
std::vector<RunResult> replicate(const Scenario& scenario, std::size_t runs,
                                 std::uint64_t seed_base, unsigned jobs = 0);

/// key=value lines mirroring ReplicateReport; "na" marks empty statistics.
std::string report_text(const ReplicateReport& report);

/// `seed,converged,steps,final_error`, one row per run.
std::string runs_csv(const ReplicateReport& report);

/// `iteration,error` with error the distance from the global best to the target.
std::string error_series_csv(const RunResult& result);

/// Self-contained SVG of obstacles, particle positions, global-best path and
/// start/target markers.
std::string trace_svg(const Scenario& scenario, const RunResult& result);

/// Self-contained SVG line chart of error against iteration.
std::string error_svg(const RunResult& result);

/// Writes trace.svg and error.svg into out_dir and returns their paths.
/// Throws IoError if the directory cannot be written.
std::vector<std::filesystem::path> emit_plots(const Scenario& scenario, const RunResult& result,
                                              const std::filesystem::path& out_dir);

}  // namespace swarmpath
