#include <fmt/format.h>

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swarmpath/errors.hpp"
#include "swarmpath/reporting.hpp"
#include "swarmpath/scenario_io.hpp"

namespace swarmpath {

namespace {

namespace fs = std::filesystem;

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError(fmt::format("cannot create output directory '{}'", dir.string()));
    }
}

std::string scenario_id(const fs::path& file) { return file.stem().string(); }

double parse_real(const std::string& text, const std::string& param) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ValidationError(fmt::format("invalid value '{}' for --param {}", text, param));
    }
    return value;
}

std::uint64_t parse_count(const std::string& text, const std::string& param) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ValidationError(fmt::format("invalid value '{}' for --param {}", text, param));
    }
    return value;
}

// Returns a copy of the scenario with one sweepable field replaced, revalidated.
Scenario with_param(Scenario sc, const std::string& name, const std::string& value) {
    if (name == "n_particles") {
        sc.params.n_particles = parse_count(value, name);
    } else if (name == "w") {
        sc.params.w = parse_real(value, name);
    } else if (name == "c1") {
        sc.params.c1 = parse_real(value, name);
    } else if (name == "c2") {
        sc.params.c2 = parse_real(value, name);
    } else if (name == "v_max") {
        sc.params.v_max = value == "unlimited" ? kUnlimitedSpeed : parse_real(value, name);
    } else if (name == "wall_margin") {
        sc.environment.wall_margin = parse_real(value, name);
    } else if (name == "epsilon") {
        sc.stop.epsilon = parse_real(value, name);
    } else if (name == "max_iterations") {
        sc.stop.max_iterations = parse_count(value, name);
    } else if (name == "spread") {
        sc.spread = parse_real(value, name);
    } else {
        throw ValidationError(fmt::format("unknown sweep parameter '{}'", name));
    }
    sc.validate();
    return sc;
}

void write_run(const Scenario& scenario, const RunResult& result, const fs::path& out_dir) {
    ensure_directory(out_dir);
    write_file(out_dir / "summary.txt", serialize_result(result, ResultFormat::summary));
    write_file(out_dir / "trace.csv", serialize_result(result, ResultFormat::trace_csv));
    write_file(out_dir / "path.csv", serialize_result(result, ResultFormat::path_csv));
    write_file(out_dir / "errors.csv", error_series_csv(result));
    emit_plots(scenario, result, out_dir);
}

void write_report(const ReplicateReport& report, const fs::path& out_dir) {
    ensure_directory(out_dir);
    write_file(out_dir / "report.txt", report_text(report));
    write_file(out_dir / "runs.csv", runs_csv(report));
}

std::string stat_or_na(const std::optional<double>& v) {
    return v ? fmt::format("{:.1f}", *v) : "na";
}

}  // namespace

int cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Particle swarm path planning in 2D spaces with rectangular obstacles",
                 "swarmpath"};
    app.require_subcommand(1);

    std::string scenario_file;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::uint64_t runs = 0;
    std::optional<std::uint64_t> seed_base;
    unsigned jobs = 0;
    std::string param;
    std::vector<std::string> values;

    auto* run_cmd = app.add_subcommand("run", "Execute one run and write summary, CSV and SVG files");
    run_cmd->add_option("scenario", scenario_file, "Scenario file")->required();
    run_cmd->add_option("--seed", seed, "Override the scenario seed");
    run_cmd->add_option("--out", out_dir, "Output directory");

    auto* rep_cmd = app.add_subcommand("replicate", "Execute K seeded runs and write a report");
    rep_cmd->add_option("scenario", scenario_file, "Scenario file")->required();
    rep_cmd->add_option("--runs", runs, "Number of runs")->required()->check(CLI::PositiveNumber);
    rep_cmd->add_option("--seed-base", seed_base, "First seed (default: scenario seed)");
    rep_cmd->add_option("--out", out_dir, "Output directory");
    rep_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Replicate once per value of one parameter");
    sweep_cmd->add_option("scenario", scenario_file, "Scenario file")->required();
    sweep_cmd->add_option("--param", param, "Parameter name")->required();
    sweep_cmd->add_option("--values", values, "Comma-separated values")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--runs", runs, "Runs per value")->default_val(100)->check(
        CLI::PositiveNumber);
    sweep_cmd->add_option("--seed-base", seed_base, "First seed (default: scenario seed)");
    sweep_cmd->add_option("--out", out_dir, "Output directory");
    sweep_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

    std::vector<std::string> argv_storage{"swarmpath"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        Scenario scenario = load_scenario(scenario_file);
        const fs::path out_path(out_dir);

        if (*run_cmd) {
            if (seed) scenario.seed = *seed;
            const RunResult result = run(scenario);
            write_run(scenario, result, out_path);
            out << serialize_result(result, ResultFormat::summary);
        } else if (*rep_cmd) {
            const auto results =
                replicate(scenario, runs, seed_base.value_or(scenario.seed), jobs);
            const ReplicateReport report = aggregate(results, scenario_id(scenario_file));
            write_report(report, out_path);
            out << report_text(report);
        } else if (*sweep_cmd) {
            std::string table = "value,runs,converged,steps_min,steps_median,steps_max,steps_mean\n";
            for (const std::string& value : values) {
                const Scenario variant = with_param(scenario, param, value);
                const auto results =
                    replicate(variant, runs, seed_base.value_or(variant.seed), jobs);
                const ReplicateReport report = aggregate(
                    results, fmt::format("{}[{}={}]", scenario_id(scenario_file), param, value));
                write_report(report, out_path / fmt::format("{}_{}", param, value));
                table += fmt::format(
                    "{},{},{},{},{},{},{}\n", value, report.runs, report.converged_count,
                    report.steps_min ? std::to_string(*report.steps_min) : "na",
                    stat_or_na(report.steps_median),
                    report.steps_max ? std::to_string(*report.steps_max) : "na",
                    stat_or_na(report.steps_mean));
            }
            ensure_directory(out_path);
            write_file(out_path / "sweep.csv", table);
            out << table;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PlacementError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace swarmpath
