// uavplace: place a UAV base station for indoor users of a high-rise.
//
//   uavplace solve     --scenario s.json --out runs/a [--solver pso] [--seed 7]
//   uavplace sweep     --scenario s.json --axis height --values 200,250,300 --out runs/h
//   uavplace reproduce [--theta-convention incidence]
//   uavplace gen-users --scenario s.json [--out users.json]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uavplace/error.hpp"
#include "uavplace/reproduce.hpp"
#include "uavplace/run.hpp"
#include "uavplace/scenario.hpp"

namespace {

using namespace uavplace;

struct Overrides {
    std::string solver;
    std::optional<std::uint64_t> seed;
    std::string theta;
    std::string indoor;
    std::string cost_unit;
};

void add_override_flags(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--solver", o.solver, "pso | gd | grid")->check(CLI::IsMember({"pso", "gd", "grid"}));
    cmd->add_option("--seed", o.seed, "Seed for user draws and the swarm (beats UAVPLACE_SEED)");
    cmd->add_option("--theta-convention", o.theta, "elevation | incidence")
        ->check(CLI::IsMember({"elevation", "incidence"}));
    cmd->add_option("--indoor-distance", o.indoor, "ray | depth")->check(CLI::IsMember({"ray", "depth"}));
    cmd->add_option("--cost-unit", o.cost_unit, "db | linear")->check(CLI::IsMember({"db", "linear"}));
}

std::optional<std::uint64_t> effective_seed(const Overrides& o) {
    if (o.seed) return o.seed;
    if (const char* env = std::getenv("UAVPLACE_SEED"); env != nullptr && *env != '\0') {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ConfigError(std::string("UAVPLACE_SEED is not an unsigned integer: ") + env);
        }
    }
    return std::nullopt;
}

void apply(const Overrides& o, Scenario& s) {
    if (!o.solver.empty()) s.solver = *parse_solver_kind(o.solver);
    if (auto seed = effective_seed(o)) s.seed = *seed;
    if (!o.theta.empty()) s.conventions.theta = *parse_theta_convention(o.theta);
    if (!o.indoor.empty()) s.conventions.indoor = *parse_indoor_distance_convention(o.indoor);
    if (!o.cost_unit.empty()) s.cost_unit = *parse_cost_unit(o.cost_unit);
    s.validate();
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    for (const std::string& item : split(text)) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
        }
        if (used != item.size() || used == 0) throw ConfigError("not a number in --values: '" + item + "'");
        values.push_back(v);
    }
    return values;
}

int cmd_solve(const std::string& scenario_path, const std::string& out, const Overrides& o) {
    Scenario s = load_scenario(scenario_path);
    apply(o, s);
    const RunRecord record = run_scenario(s);
    write_run_artifacts(record, s, out);
    const Vec3& b = record.result.best_location;
    std::cout << to_string(record.solver) << " best (" << format_double(b.x) << ", "
              << format_double(b.y) << ", " << format_double(b.z) << ") total "
              << format_double(record.report.total_loss_db) << " dB"
              << (record.feasible() ? "" : " [infeasible]") << "\n";
    return exit_code_for(record);
}

int cmd_sweep(const std::string& scenario_path, const std::string& out, const std::string& axis,
              const std::string& values, const std::string& solvers, const Overrides& o) {
    Scenario s = load_scenario(scenario_path);
    apply(o, s);
    std::vector<SolverKind> kinds;
    for (const std::string& item : split(solvers)) {
        const auto kind = parse_solver_kind(item);
        if (!kind) throw ConfigError("unknown solver in --solvers: '" + item + "'");
        kinds.push_back(*kind);
    }
    const SweepSummary summary = run_sweep(s, *parse_sweep_axis(axis), parse_values(values), kinds, out);
    std::cout << format_summary_csv(summary);
    if (summary.error) {
        std::cerr << "sweep aborted: " << *summary.error << "\n";
        return 1;
    }
    return 0;
}

int cmd_reproduce(const Overrides& o, bool symmetric_only) {
    ReproduceOptions options;
    if (!o.theta.empty()) options.conventions.theta = *parse_theta_convention(o.theta);
    if (!o.indoor.empty()) options.conventions.indoor = *parse_indoor_distance_convention(o.indoor);
    if (!o.cost_unit.empty()) options.cost_unit = *parse_cost_unit(o.cost_unit);
    if (auto seed = effective_seed(o)) options.seed = *seed;
    options.symmetric_only = symmetric_only;
    const ReproduceReport report = reproduce(options);
    std::cout << format_report(report);
    return report.passed() ? 0 : 1;
}

int cmd_gen_users(const std::string& scenario_path, const std::string& out, const Overrides& o) {
    Scenario s = load_scenario(scenario_path);
    apply(o, s);
    const UserSet users = build_users(s);
    nlohmann::json j;
    j["distribution"] = to_string(users.distribution());
    j["users_per_floor"] = users.users_per_floor();
    j["seed"] = users.seed();
    j["building"] = {{"x_b", s.building.x_b},
                     {"y_b", s.building.y_b},
                     {"z_b", s.building.z_b},
                     {"floor_height", s.building.floor_height}};
    auto& list = j["users"] = nlohmann::json::array();
    for (const Vec3& u : users.users()) list.push_back({u.x, u.y, u.z});
    const std::string body = j.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << body;
    } else {
        std::ofstream f(out);
        if (!f) throw ConfigError("cannot write '" + out + "'");
        f << body;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV base-station placement for indoor users of a high-rise building"};
    app.set_version_flag("--version", uavplace::tool_version());
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out;
    std::string axis;
    std::string values;
    std::string solvers = "pso,gd";
    bool symmetric_only = false;
    Overrides o;

    auto* solve = app.add_subcommand("solve", "Run one scenario and write result.json and trace.csv");
    solve->add_option("--scenario", scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
    solve->add_option("--out", out, "Output directory")->required();
    add_override_flags(solve, o);

    auto* sweep = app.add_subcommand("sweep", "Vary building height or width and tabulate results");
    sweep->add_option("--scenario", scenario_path, "Base scenario JSON")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out, "Output directory")->required();
    sweep->add_option("--axis", axis, "height | width")->required()->check(CLI::IsMember({"height", "width"}));
    sweep->add_option("--values", values, "Comma-separated z_b or x_b values");
    sweep->add_option("--solvers", solvers, "Comma-separated solvers")->capture_default_str();
    add_override_flags(sweep, o);

    auto* repro = app.add_subcommand("reproduce", "Compare against the published results table");
    repro->add_flag("--symmetric-only", symmetric_only, "Only the symmetric-layout rows");
    add_override_flags(repro, o);

    auto* gen = app.add_subcommand("gen-users", "Dump the scenario's user positions as JSON");
    gen->add_option("--scenario", scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
    gen->add_option("--out", out, "Output file (default stdout)");
    add_override_flags(gen, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) return cmd_solve(scenario_path, out, o);
        if (*sweep) return cmd_sweep(scenario_path, out, axis, values, solvers, o);
        if (*repro) return cmd_reproduce(o, symmetric_only);
        if (*gen) return cmd_gen_users(scenario_path, out, o);
    } catch (const uavplace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
