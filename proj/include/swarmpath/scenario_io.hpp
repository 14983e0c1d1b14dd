#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "swarmpath/simulator.hpp"

namespace swarmpath {

/// Parses a JSON scenario document against a closed schema.
///
/// Throws ParseError (with line/column) on malformed JSON and
/// ValidationError on missing, unknown or ill-typed fields and on any
/// violated scenario invariant. Omitted optional fields take defaults:
/// space.bounds [-100,-100,100,100], pso.v_max "unlimited", policy
/// segment_reject/keep_velocity/0, stop epsilon 1.0 / max_iterations 500,
/// spread 10.
Scenario parse_scenario(std::string_view text);

/// Canonical JSON form with every field spelled out.
std::string serialize_scenario(const Scenario& scenario);

Scenario load_scenario(const std::filesystem::path& path);

enum class ResultFormat { summary, trace_csv, path_csv };

/// summary: key=value lines (converged, steps, final_error, seed).
/// trace_csv: `iteration,particle,x,y`. path_csv: `iteration,x,y,error`.
/// All reals are printed with six decimals.
std::string serialize_result(const RunResult& result, ResultFormat format);

/// Reads the whole file; throws IoError.
std::string read_file(const std::filesystem::path& path);
/// Writes the whole file; throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Command-line entry point. args excludes the program name.
/// Returns 0 on success, 1 on usage or validation errors, 2 on I/O errors.
int cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace swarmpath
