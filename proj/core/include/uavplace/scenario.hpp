#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "uavplace/geometry.hpp"
#include "uavplace/objective.hpp"
#include "uavplace/propagation.hpp"
#include "uavplace/solvers.hpp"

namespace uavplace {

inline constexpr std::string_view kScenarioSchema = "uavplace.scenario/v1";

struct UserSpec {
    Distribution distribution = Distribution::SymmetricGrid;
    int users_per_floor = 20;
    std::optional<GridShape> grid;

    friend bool operator==(const UserSpec& a, const UserSpec& b) {
        return a.distribution == b.distribution && a.users_per_floor == b.users_per_floor &&
               a.grid.has_value() == b.grid.has_value() &&
               (!a.grid || (a.grid->nx == b.grid->nx && a.grid->ny == b.grid->ny));
    }
};

struct GridSolverConfig {
    /// Lattice box; defaults to x in [-150, -1], y in [0, y_b], z in [0, z_b].
    std::optional<SearchBounds> box;
    double resolution = 1.0;
    /// When set, scan at this spacing first and refine around the winner.
    std::optional<double> coarse;
    double window = 10.0;
    unsigned long long budget = kDefaultGridBudget;

    friend bool operator==(const GridSolverConfig&, const GridSolverConfig&) = default;
};

/// Everything needed to reproduce one placement run. Omitted JSON fields
/// take the defaults below, so a minimal scenario is just a building.
struct Scenario {
    std::string name;
    Building building;
    UserSpec users;
    /// Feeds the user draw and the swarm (separate streams, see rng.hpp).
    std::uint64_t seed = 1;
    PathLossParams path_loss;
    LinkConventions conventions;
    SearchBounds bounds;
    std::optional<RadioConfig> radio;
    CostUnit cost_unit = CostUnit::DbSum;
    SolverKind solver = SolverKind::Pso;
    PsoConfig pso;
    GdConfig gd = baseline_gd();
    /// Defaults to (-x_b, y_b / 2, z_b / 2).
    std::optional<Vec3> gd_start;
    GridSolverConfig grid;

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;

    /// Gradient descent used for the baseline moves along x only, with the UAV
    /// held on the building's y and z mid-planes.
    static GdConfig baseline_gd();

    SearchBounds grid_box() const;
    Vec3 gd_start_point() const;
    PsoConfig pso_config() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses and validates a scenario document. Throws ParseError naming the
/// offending field, or ConfigError for a document that parses but is invalid.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::string& path);

/// Canonical JSON: every field written, keys sorted.
std::string serialize_scenario(const Scenario& scenario, int indent = 2);

/// 16 hex digits of FNV-1a over the compact canonical form.
std::string scenario_digest(const Scenario& scenario);

}  // namespace uavplace
