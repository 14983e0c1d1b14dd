#include "swarmpath/reporting.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <mutex>
#include <numeric>
#include <thread>

#include "swarmpath/errors.hpp"
#include "swarmpath/scenario_io.hpp"

namespace swarmpath {

ReplicateReport aggregate(const std::vector<RunResult>& results, std::string scenario_id) {
    if (results.empty()) throw InvalidInput("aggregate: no results");

    ReplicateReport report;
    report.scenario_id = std::move(scenario_id);
    report.runs = results.size();

    std::vector<std::size_t> steps;
    for (const RunResult& r : results) {
        report.entries.push_back({r.seed, r.converged, r.steps, r.final_error()});
        if (r.converged) {
            steps.push_back(r.steps);
        } else {
            report.failure_seeds.push_back(r.seed);
        }
    }
    report.converged_count = steps.size();

    const auto by_seed = [](const RunEntry& a, const RunEntry& b) {
        if (a.seed != b.seed) return a.seed < b.seed;
        if (a.steps != b.steps) return a.steps < b.steps;
        if (a.converged != b.converged) return a.converged < b.converged;
        return a.final_error < b.final_error;
    };
    std::sort(report.entries.begin(), report.entries.end(), by_seed);
    std::sort(report.failure_seeds.begin(), report.failure_seeds.end());

    if (!steps.empty()) {
        std::sort(steps.begin(), steps.end());
        report.steps_min = steps.front();
        report.steps_max = steps.back();
        report.steps_median = static_cast<double>(steps[(steps.size() - 1) / 2]);
        const double total = std::accumulate(steps.begin(), steps.end(), 0.0);
        report.steps_mean = total / static_cast<double>(steps.size());
    }
    return report;
}

std::vector<RunResult> replicate(const Scenario& scenario, std::size_t runs,
                                 std::uint64_t seed_base, unsigned jobs) {
    scenario.validate();
    std::vector<RunResult> results(runs);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(runs, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto worker = [&] {
        for (std::size_t i = next++; i < runs; i = next++) {
            try {
                Scenario copy = scenario;
                copy.seed = seed_base + i;
                results[i] = run(copy);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

std::string report_text(const ReplicateReport& report) {
    const auto opt = [](const auto& v, const char* spec) -> std::string {
        return v ? fmt::format(fmt::runtime(spec), *v) : "na";
    };
    std::string seeds;
    for (std::size_t i = 0; i < report.failure_seeds.size(); ++i) {
        if (i) seeds += ',';
        seeds += std::to_string(report.failure_seeds[i]);
    }
    return fmt::format(
        "scenario_id={}\nruns={}\nconverged_count={}\nsteps_min={}\nsteps_median={}\n"
        "steps_max={}\nsteps_mean={}\nfailure_seeds={}\n",
        report.scenario_id, report.runs, report.converged_count, opt(report.steps_min, "{}"),
        opt(report.steps_median, "{:.1f}"), opt(report.steps_max, "{}"),
        opt(report.steps_mean, "{:.3f}"), seeds);
}

std::string runs_csv(const ReplicateReport& report) {
    std::string out = "seed,converged,steps,final_error\n";
    for (const RunEntry& e : report.entries) {
        fmt::format_to(std::back_inserter(out), "{},{},{},{:.6f}\n", e.seed, e.converged ? 1 : 0,
                       e.steps, e.final_error);
    }
    return out;
}

std::string error_series_csv(const RunResult& result) {
    std::string out = "iteration,error\n";
    for (std::size_t i = 0; i < result.error_series.size(); ++i) {
        fmt::format_to(std::back_inserter(out), "{},{:.6f}\n", i, result.error_series[i]);
    }
    return out;
}

namespace {

constexpr double kCanvas = 600.0;
constexpr double kPad = 40.0;

// World coordinates to SVG pixels, y pointing up.
struct Frame {
    Rect world;
    double width;
    double height;

    double sx(double x) const {
        return kPad + (x - world.min_corner.x) / (world.max_corner.x - world.min_corner.x) * width;
    }
    double sy(double y) const {
        return kPad + (world.max_corner.y - y) / (world.max_corner.y - world.min_corner.y) * height;
    }
};

std::string svg_open(double w, double h) {
    return fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
        "viewBox=\"0 0 {0:.0f} {1:.0f}\">\n"
        "<rect class=\"background\" x=\"0\" y=\"0\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
        "fill=\"white\"/>\n",
        w, h);
}

void rect_element(std::string& out, const Frame& f, const Rect& r, std::string_view cls,
                  std::string_view style) {
    fmt::format_to(std::back_inserter(out),
                   "<rect class=\"{}\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" "
                   "height=\"{:.3f}\" {}/>\n",
                   cls, f.sx(r.min_corner.x), f.sy(r.max_corner.y),
                   f.sx(r.max_corner.x) - f.sx(r.min_corner.x),
                   f.sy(r.min_corner.y) - f.sy(r.max_corner.y), style);
}

}  // namespace

std::string trace_svg(const Scenario& scenario, const RunResult& result) {
    const Environment& env = scenario.environment;
    const Rect& b = env.bounds;
    const double aspect = (b.max_corner.y - b.min_corner.y) / (b.max_corner.x - b.min_corner.x);
    const Frame f{b, kCanvas, kCanvas * aspect};
    auto it = [](std::string& s) { return std::back_inserter(s); };

    std::string out = svg_open(f.width + 2 * kPad, f.height + 2 * kPad);
    fmt::format_to(it(out),
                   "<text x=\"{:.3f}\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" "
                   "text-anchor=\"middle\">seed {}, {} steps, {}</text>\n",
                   kPad + f.width / 2, result.seed, result.steps,
                   result.converged ? "converged" : "not converged");
    rect_element(out, f, b, "bounds", "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"");
    if (env.wall_margin > 0.0) {
        for (const Rect& r : env.effective_obstacles()) {
            rect_element(out, f, r, "margin",
                         "fill=\"#bbbbbb\" stroke=\"none\" fill-opacity=\"0.6\"");
        }
    }
    for (const Rect& r : env.obstacles) {
        rect_element(out, f, r, "obstacle", "fill=\"#444444\" stroke=\"none\"");
    }

    // Later iterations are drawn more opaque.
    const double last = static_cast<double>(std::max<std::size_t>(result.trace.size(), 2) - 1);
    out += "<g class=\"particles\" fill=\"#1f77b4\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        fmt::format_to(it(out), "<g fill-opacity=\"{:.3f}\">\n",
                       0.08 + 0.72 * static_cast<double>(i) / last);
        for (const Vec2& p : result.trace[i]) {
            fmt::format_to(it(out), "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"1.5\"/>\n",
                           f.sx(p.x), f.sy(p.y));
        }
        out += "</g>\n";
    }
    out += "</g>\n";

    out += "<polyline class=\"gbest\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
    const auto path = extract_path(result);
    for (std::size_t i = 0; i < path.size(); ++i) {
        fmt::format_to(it(out), "{}{:.3f},{:.3f}", i ? " " : "", f.sx(path[i].x), f.sy(path[i].y));
    }
    out += "\"/>\n";

    fmt::format_to(it(out),
                   "<circle class=\"start\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"5\" fill=\"#2ca02c\"/>\n",
                   f.sx(scenario.start.x), f.sy(scenario.start.y));
    fmt::format_to(it(out),
                   "<circle class=\"target\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"5\" fill=\"none\" "
                   "stroke=\"#d62728\" stroke-width=\"2\"/>\n",
                   f.sx(scenario.target.x), f.sy(scenario.target.y));
    out += "</svg>\n";
    return out;
}

std::string error_svg(const RunResult& result) {
    const double width = kCanvas;
    const double height = kCanvas * 0.6;
    const double x_max = static_cast<double>(std::max<std::size_t>(result.steps, 1));
    double y_max = 0.0;
    for (double e : result.error_series) y_max = std::max(y_max, e);
    if (y_max <= 0.0) y_max = 1.0;
    const Frame f{{{0.0, 0.0}, {x_max, y_max}}, width, height};
    auto it = [](std::string& s) { return std::back_inserter(s); };

    std::string out = svg_open(width + 2 * kPad, height + 2 * kPad);
    fmt::format_to(it(out),
                   "<line class=\"axis\" x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{2:.3f}\" y2=\"{1:.3f}\" "
                   "stroke=\"black\"/>\n"
                   "<line class=\"axis\" x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{0:.3f}\" y2=\"{3:.3f}\" "
                   "stroke=\"black\"/>\n",
                   f.sx(0), f.sy(0), f.sx(x_max), f.sy(y_max));
    const auto label = [&](double x, double y, std::string_view anchor, const std::string& text) {
        fmt::format_to(it(out),
                       "<text x=\"{:.3f}\" y=\"{:.3f}\" font-family=\"sans-serif\" "
                       "font-size=\"12\" text-anchor=\"{}\">{}</text>\n",
                       x, y, anchor, text);
    };
    label(f.sx(0), f.sy(0) + 16, "middle", "0");
    label(f.sx(x_max), f.sy(0) + 16, "middle", fmt::format("{:.0f}", x_max));
    label(f.sx(0) - 6, f.sy(0) + 4, "end", "0");
    label(f.sx(0) - 6, f.sy(y_max) + 4, "end", fmt::format("{:.1f}", y_max));
    label(f.sx(x_max / 2), f.sy(0) + 32, "middle", "iteration");
    label(f.sx(0) + 4, f.sy(y_max) - 8, "start", "error (distance to target)");

    out += "<polyline class=\"error\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < result.error_series.size(); ++i) {
        fmt::format_to(it(out), "{}{:.3f},{:.3f}", i ? " " : "", f.sx(static_cast<double>(i)),
                       f.sy(result.error_series[i]));
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::vector<std::filesystem::path> emit_plots(const Scenario& scenario, const RunResult& result,
                                              const std::filesystem::path& out_dir) {
    if (!std::filesystem::is_directory(out_dir)) {
        throw IoError(fmt::format("output directory '{}' does not exist", out_dir.string()));
    }
    std::vector<std::filesystem::path> written{out_dir / "trace.svg", out_dir / "error.svg"};
    write_file(written[0], trace_svg(scenario, result));
    write_file(written[1], error_svg(result));
    return written;
}

}  // namespace swarmpath
