#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uavplace/objective.hpp"
#include "uavplace/scenario.hpp"
#include "uavplace/solvers.hpp"

namespace uavplace {

std::string tool_version();

struct RunRecord {
    std::string scenario_name;
    std::string scenario_digest;
    std::uint64_t seed = 0;
    SolverKind solver = SolverKind::Pso;
    CostUnit cost_unit = CostUnit::DbSum;
    PlacementResult result;
    /// Re-evaluation of the best point, including per-user losses and power.
    CostReport report;
    double duration_s = 0.0;
    std::string started_utc;
    std::string tool_version;

    bool feasible() const { return report.feasible; }
};

UserSet build_users(const Scenario& scenario);
PlacementObjective build_objective(const Scenario& scenario);

/// Runs the scenario's solver. No files are touched.
RunRecord run_scenario(const Scenario& scenario);

/// `iteration,global_best_cost_db` followed by one row per trace entry;
/// numbers use the shortest representation that parses back exactly.
std::string format_trace_csv(const PlacementResult& result);

/// result.json body. Only the "timestamp" object varies between reruns.
std::string format_result_json(const RunRecord& record, const Scenario& scenario);

/// Writes result.json and trace.csv into `out_dir` (created if needed).
void write_run_artifacts(const RunRecord& record, const Scenario& scenario,
                         const std::filesystem::path& out_dir);

/// 0 when the optimum is feasible, 2 when it violates bounds or l_max.
int exit_code_for(const RunRecord& record);

enum class SweepAxis { Height, Width };

std::optional<SweepAxis> parse_sweep_axis(std::string_view text);

struct SummaryRow {
    SolverKind solver = SolverKind::Pso;
    Distribution distribution = Distribution::SymmetricGrid;
    double z_b = 0.0;
    double x_b = 0.0;
    double y_b = 0.0;
    Vec3 best;
    double total_loss_db = 0.0;
};

struct SweepSummary {
    std::vector<SummaryRow> rows;
    /// Set when a run failed; rows holds everything completed before it.
    std::optional<std::string> error;
};

/// Runs every (value, solver) pair in declared order, writing each run to
/// out_dir/<axis>_<value>_<solver>/ and the table to out_dir/summary.csv.
SweepSummary run_sweep(const Scenario& base, SweepAxis axis, const std::vector<double>& values,
                       const std::vector<SolverKind>& solvers,
                       const std::optional<std::filesystem::path>& out_dir);

/// summary.csv body: solver,distribution,z_b,x_b,y_b,best_x,best_y,best_z,total_loss_db
std::string format_summary_csv(const SweepSummary& summary);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace uavplace
