#include "uavplace/run.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "uavplace/error.hpp"

#ifndef UAVPLACE_VERSION
#define UAVPLACE_VERSION "0.0.0"
#endif

namespace uavplace {

using json = nlohmann::json;

namespace {

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << body;
}

json double_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string tool_version() { return UAVPLACE_VERSION; }

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ec == std::errc() ? end : buf);
}

UserSet build_users(const Scenario& scenario) {
    if (scenario.users.distribution == Distribution::SymmetricGrid) {
        return generate_symmetric_users(scenario.building, scenario.users.users_per_floor,
                                        scenario.users.grid);
    }
    return generate_uniform_users(scenario.building, scenario.users.users_per_floor, scenario.seed);
}

PlacementObjective build_objective(const Scenario& scenario) {
    return PlacementObjective(build_users(scenario), scenario.building, scenario.path_loss,
                              scenario.bounds, scenario.conventions, scenario.cost_unit);
}

namespace {

PlacementResult solve(const Scenario& scenario, const PlacementObjective& objective) {
    const CostFunction cost = std::cref(objective);
    switch (scenario.solver) {
        case SolverKind::Pso:
            return pso_solve(cost, scenario.pso_config());
        case SolverKind::GradientDescent:
            return gd_solve(cost, scenario.gd_start_point(), scenario.gd);
        case SolverKind::Grid: {
            SearchBounds box = scenario.grid_box();
            return scenario.grid.coarse
                       ? grid_refine_solve(cost, box, *scenario.grid.coarse,
                                           scenario.grid.resolution, scenario.grid.window,
                                           scenario.grid.budget)
                       : grid_solve(cost, box, scenario.grid.resolution, scenario.grid.budget);
        }
    }
    throw ConfigError("unknown solver");
}

}  // namespace

RunRecord run_scenario(const Scenario& scenario) {
    scenario.validate();
    RunRecord record;
    record.scenario_name = scenario.name;
    record.scenario_digest = scenario_digest(scenario);
    record.seed = scenario.seed;
    record.solver = scenario.solver;
    record.cost_unit = scenario.cost_unit;
    record.started_utc = utc_now();
    record.tool_version = tool_version();

    const auto start = std::chrono::steady_clock::now();
    const PlacementObjective objective = build_objective(scenario);
    std::optional<PlacementResult> result;
    try {
        result = solve(scenario, objective);
        if (!std::isfinite(result->best_cost)) result.reset();
    } catch (const InitializationError&) {
        if (std::isinf(scenario.bounds.l_max)) throw;
    }
    if (!result) {
        // Nothing meets l_max. Minimize without the cap so the record shows
        // how far the best placement is from the budget; it is reported
        // infeasible.
        Scenario relaxed = scenario;
        relaxed.bounds.l_max = std::numeric_limits<double>::infinity();
        result = solve(relaxed, build_objective(relaxed));
    }
    record.result = std::move(*result);

    record.report = objective.report(record.result.best_location);
    if (!std::isfinite(record.result.best_cost)) record.report.feasible = false;
    if (scenario.radio) record.report.total_power_w = total_power(record.report, *scenario.radio);
    record.duration_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

std::string format_trace_csv(const PlacementResult& result) {
    std::string out = "iteration,global_best_cost_db\n";
    for (const TracePoint& t : result.trace) {
        out += std::to_string(t.iteration);
        out += ',';
        out += format_double(t.best_cost);
        out += '\n';
    }
    return out;
}

std::string format_result_json(const RunRecord& record, const Scenario& scenario) {
    json j;
    j["tool_version"] = record.tool_version;
    j["timestamp"] = {{"started_utc", record.started_utc}, {"duration_s", record.duration_s}};
    j["scenario_name"] = record.scenario_name;
    j["scenario_digest"] = record.scenario_digest;
    j["scenario"] = json::parse(serialize_scenario(scenario));
    j["seed"] = record.seed;
    j["solver"] = to_string(record.solver);
    j["cost_unit"] = to_string(record.cost_unit);

    const PlacementResult& r = record.result;
    j["best_location"] = json::array({r.best_location.x, r.best_location.y, r.best_location.z});
    j["best_cost"] = double_or_null(r.best_cost);
    j["evaluations"] = r.evaluations;
    j["iterations"] = r.trace.empty() ? 0 : r.trace.back().iteration;
    j["stagnated"] = r.stagnated;

    json report;
    report["total_loss_db"] = double_or_null(record.report.total_loss_db);
    report["feasible"] = record.report.feasible;
    report["per_user_loss"] = record.report.per_user_loss;
    report["total_power_w"] = record.report.total_power_w
                                  ? double_or_null(*record.report.total_power_w)
                                  : json(nullptr);
    j["report"] = std::move(report);
    return j.dump(2) + "\n";
}

void write_run_artifacts(const RunRecord& record, const Scenario& scenario,
                         const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir / "result.json", format_result_json(record, scenario));
    write_file(out_dir / "trace.csv", format_trace_csv(record.result));
}

int exit_code_for(const RunRecord& record) { return record.feasible() ? 0 : 2; }

std::optional<SweepAxis> parse_sweep_axis(std::string_view text) {
    if (text == "height") return SweepAxis::Height;
    if (text == "width") return SweepAxis::Width;
    return std::nullopt;
}

SweepSummary run_sweep(const Scenario& base, SweepAxis axis, const std::vector<double>& values,
                       const std::vector<SolverKind>& solvers,
                       const std::optional<std::filesystem::path>& out_dir) {
    SweepSummary summary;
    if (out_dir) std::filesystem::create_directories(*out_dir);
    for (double value : values) {
        for (SolverKind solver : solvers) {
            Scenario s = base;
            (axis == SweepAxis::Height ? s.building.z_b : s.building.x_b) = value;
            s.solver = solver;
            if (s.radio) s.radio->num_users_m = s.users.users_per_floor * s.building.floor_count();
            try {
                const RunRecord record = run_scenario(s);
                if (out_dir) {
                    const std::string dir = std::string(axis == SweepAxis::Height ? "height_" : "width_") +
                                            format_double(value) + "_" +
                                            std::string(to_string(solver));
                    write_run_artifacts(record, s, *out_dir / dir);
                }
                summary.rows.push_back({solver, s.users.distribution, s.building.z_b,
                                        s.building.x_b, s.building.y_b,
                                        record.result.best_location, record.report.total_loss_db});
            } catch (const Error& e) {
                summary.error = "value " + format_double(value) + ", solver " +
                                std::string(to_string(solver)) + ": " + e.what();
                break;
            }
        }
        if (summary.error) break;
    }
    if (out_dir) write_file(*out_dir / "summary.csv", format_summary_csv(summary));
    return summary;
}

std::string format_summary_csv(const SweepSummary& summary) {
    std::string out = "solver,distribution,z_b,x_b,y_b,best_x,best_y,best_z,total_loss_db\n";
    for (const SummaryRow& r : summary.rows) {
        out += std::string(to_string(r.solver)) + "," + std::string(to_string(r.distribution)) +
               "," + format_double(r.z_b) + "," + format_double(r.x_b) + "," +
               format_double(r.y_b) + "," + format_double(r.best.x) + "," +
               format_double(r.best.y) + "," + format_double(r.best.z) + "," +
               format_double(r.total_loss_db) + "\n";
    }
    if (summary.error) out += "# partial: " + *summary.error + "\n";
    return out;
}

}  // namespace uavplace
