#include "swarmpath/scenario_io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "swarmpath/errors.hpp"

namespace swarmpath {

using nlohmann::json;

namespace {

// Wraps one JSON object of the document; rejects keys outside the allowed set.
class Section {
public:
    Section(const json& node, std::string path, std::initializer_list<std::string_view> allowed)
        : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) fail("must be an object");
        for (const auto& item : node_.items()) {
            if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
                throw ValidationError(fmt::format("unknown field '{}'", qualified(item.key())));
            }
        }
    }

    bool has(std::string_view key) const { return node_.contains(key); }

    const json& required(std::string_view key) const {
        auto it = node_.find(key);
        if (it == node_.end()) {
            throw ValidationError(fmt::format("missing field '{}'", qualified(key)));
        }
        return *it;
    }

    std::string qualified(std::string_view key) const {
        return path_.empty() ? std::string(key) : fmt::format("{}.{}", path_, key);
    }

    double number(std::string_view key) const {
        const json& v = required(key);
        if (!v.is_number()) {
            throw ValidationError(fmt::format("field '{}' must be a number", qualified(key)));
        }
        return v.get<double>();
    }

    double number_or(std::string_view key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    std::uint64_t unsigned_integer(std::string_view key) const {
        const json& v = required(key);
        if (!v.is_number_unsigned()) {
            throw ValidationError(
                fmt::format("field '{}' must be a non-negative integer", qualified(key)));
        }
        return v.get<std::uint64_t>();
    }

    std::string text(std::string_view key) const {
        const json& v = required(key);
        if (!v.is_string()) {
            throw ValidationError(fmt::format("field '{}' must be a string", qualified(key)));
        }
        return v.get<std::string>();
    }

    template <std::size_t N>
    std::array<double, N> numbers(std::string_view key) const {
        return numbers_of<N>(required(key), qualified(key));
    }

    template <std::size_t N>
    static std::array<double, N> numbers_of(const json& v, const std::string& name) {
        if (!v.is_array() || v.size() != N ||
            !std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); })) {
            throw ValidationError(fmt::format("field '{}' must be an array of {} numbers", name, N));
        }
        std::array<double, N> out{};
        for (std::size_t i = 0; i < N; ++i) out[i] = v[i].get<double>();
        return out;
    }

private:
    [[noreturn]] void fail(std::string_view what) const {
        throw ValidationError(
            fmt::format("{} {}", path_.empty() ? "document" : fmt::format("field '{}'", path_), what));
    }

    const json& node_;
    std::string path_;
};

Vec2 point(const Section& s, std::string_view key) {
    const auto a = s.numbers<2>(key);
    return {a[0], a[1]};
}

Rect rect_of(const std::array<double, 4>& a) { return {{a[0], a[1]}, {a[2], a[3]}}; }

json rect_json(const Rect& r) {
    return json::array({r.min_corner.x, r.min_corner.y, r.max_corner.x, r.max_corner.y});
}

json point_json(Vec2 p) { return json::array({p.x, p.y}); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based index of the last byte read.
    const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        throw ParseError(line, column,
                         fmt::format("syntax error at line {}, column {}", line, column));
    }

    const Section top(doc, "",
                      {"space", "start", "target", "obstacles", "pso", "policy", "stop", "seed",
                       "spread"});
    Scenario sc;

    if (top.has("space")) {
        const Section space(top.required("space"), "space", {"bounds"});
        sc.environment.bounds = rect_of(space.numbers<4>("bounds"));
    }
    sc.start = point(top, "start");
    sc.target = point(top, "target");

    const json& obstacles = top.required("obstacles");
    if (!obstacles.is_array()) throw ValidationError("field 'obstacles' must be an array");
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const Rect r =
            rect_of(Section::numbers_of<4>(obstacles[i], fmt::format("obstacles[{}]", i)));
        if (!r.well_ordered()) {
            throw ValidationError(
                fmt::format("obstacles[{}]: max_corner must not be less than min_corner", i));
        }
        sc.environment.obstacles.push_back(r);
    }

    const Section pso(top.required("pso"), "pso", {"n_particles", "w", "c1", "c2", "v_max"});
    sc.params.n_particles = pso.unsigned_integer("n_particles");
    sc.params.w = pso.number("w");
    sc.params.c1 = pso.number("c1");
    sc.params.c2 = pso.number("c2");
    sc.params.v_max = kUnlimitedSpeed;
    if (pso.has("v_max")) {
        const json& v = pso.required("v_max");
        if (v.is_string() && v.get<std::string>() == "unlimited") {
            sc.params.v_max = kUnlimitedSpeed;
        } else if (v.is_number()) {
            sc.params.v_max = v.get<double>();
        } else {
            throw ValidationError("field 'pso.v_max' must be a number or \"unlimited\"");
        }
    }

    if (top.has("policy")) {
        const Section policy(top.required("policy"), "policy",
                             {"collision_mode", "on_reject", "wall_margin"});
        if (policy.has("collision_mode")) {
            const std::string mode = policy.text("collision_mode");
            if (mode == "point_reject") {
                sc.policy.collision_mode = CollisionMode::point_reject;
            } else if (mode == "segment_reject") {
                sc.policy.collision_mode = CollisionMode::segment_reject;
            } else {
                throw ValidationError(fmt::format(
                    "field 'policy.collision_mode' must be point_reject or segment_reject, got '{}'",
                    mode));
            }
        }
        if (policy.has("on_reject")) {
            const std::string on = policy.text("on_reject");
            if (on == "keep_velocity") {
                sc.policy.on_reject = OnReject::keep_velocity;
            } else if (on == "zero_velocity") {
                sc.policy.on_reject = OnReject::zero_velocity;
            } else {
                throw ValidationError(fmt::format(
                    "field 'policy.on_reject' must be keep_velocity or zero_velocity, got '{}'",
                    on));
            }
        }
        sc.environment.wall_margin = policy.number_or("wall_margin", 0.0);
    }

    if (top.has("stop")) {
        const Section stop(top.required("stop"), "stop", {"epsilon", "max_iterations"});
        sc.stop.epsilon = stop.number_or("epsilon", sc.stop.epsilon);
        if (stop.has("max_iterations")) sc.stop.max_iterations = stop.unsigned_integer("max_iterations");
    }

    sc.seed = top.unsigned_integer("seed");
    sc.spread = top.number_or("spread", sc.spread);

    sc.validate();
    return sc;
}

std::string serialize_scenario(const Scenario& sc) {
    json obstacles = json::array();
    for (const Rect& r : sc.environment.obstacles) obstacles.push_back(rect_json(r));

    json doc;
    doc["space"] = {{"bounds", rect_json(sc.environment.bounds)}};
    doc["start"] = point_json(sc.start);
    doc["target"] = point_json(sc.target);
    doc["obstacles"] = std::move(obstacles);
    doc["pso"] = {{"n_particles", sc.params.n_particles},
                  {"w", sc.params.w},
                  {"c1", sc.params.c1},
                  {"c2", sc.params.c2}};
    if (sc.params.speed_limited()) {
        doc["pso"]["v_max"] = sc.params.v_max;
    } else {
        doc["pso"]["v_max"] = "unlimited";
    }
    doc["policy"] = {
        {"collision_mode", sc.policy.collision_mode == CollisionMode::point_reject
                               ? "point_reject"
                               : "segment_reject"},
        {"on_reject",
         sc.policy.on_reject == OnReject::keep_velocity ? "keep_velocity" : "zero_velocity"},
        {"wall_margin", sc.environment.wall_margin}};
    doc["stop"] = {{"epsilon", sc.stop.epsilon}, {"max_iterations", sc.stop.max_iterations}};
    doc["seed"] = sc.seed;
    doc["spread"] = sc.spread;
    return doc.dump(2) + "\n";
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_file(path)); }

std::string serialize_result(const RunResult& result, ResultFormat format) {
    std::string out;
    auto it = std::back_inserter(out);
    switch (format) {
        case ResultFormat::summary:
            fmt::format_to(it, "converged={}\nsteps={}\nfinal_error={:.6f}\nseed={}\n",
                           result.converged, result.steps, result.final_error(), result.seed);
            break;
        case ResultFormat::trace_csv:
            out += "iteration,particle,x,y\n";
            for (std::size_t i = 0; i < result.trace.size(); ++i) {
                for (std::size_t j = 0; j < result.trace[i].size(); ++j) {
                    const Vec2 p = result.trace[i][j];
                    fmt::format_to(it, "{},{},{:.6f},{:.6f}\n", i, j, p.x, p.y);
                }
            }
            break;
        case ResultFormat::path_csv:
            out += "iteration,x,y,error\n";
            for (std::size_t i = 0; i < result.gbest_path.size(); ++i) {
                const Vec2 p = result.gbest_path[i];
                fmt::format_to(it, "{},{:.6f},{:.6f},{:.6f}\n", i, p.x, p.y,
                               result.error_series[i]);
            }
            break;
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError(fmt::format("error reading '{}'", path.string()));
    return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw IoError(fmt::format("error writing '{}'", path.string()));
}

}  // namespace swarmpath
