#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavplace/run.hpp"

namespace uavplace {

/// One published simulation result.
struct PublishedRow {
    SolverKind solver;
    Distribution distribution;
    double z_b;
    double x_b;
    double y_b;
    Vec3 placement;
    double total_loss_db;
};

/// The 18 published rows: symmetric heights, uniform heights, uniform widths.
const std::vector<PublishedRow>& published_results();

/// Reproduction tolerances.
inline constexpr double kPlacementTolM = 2.0;
inline constexpr double kSymmetricTotalRelTol = 0.002;
inline constexpr double kUniformTotalRelTol = 0.01;

struct ReproduceOptions {
    LinkConventions conventions;
    CostUnit cost_unit = CostUnit::DbSum;
    std::uint64_t seed = 1;
    /// Restrict to the symmetric block.
    bool symmetric_only = false;
};

struct RowOutcome {
    PublishedRow published;
    Vec3 best;
    double total = 0.0;  ///< dB sum, or linear sum in linear mode
};

struct Check {
    std::string label;
    std::string detail;
    bool pass = false;
};

struct ReproduceReport {
    ReproduceOptions options;
    std::vector<RowOutcome> rows;
    std::vector<Check> checks;

    bool passed() const;
    /// Checks whose label starts with `prefix`.
    bool passed(std::string_view prefix) const;
};

Scenario published_scenario(const PublishedRow& row, const ReproduceOptions& options);

ReproduceReport reproduce(const ReproduceOptions& options = {});

std::string format_report(const ReproduceReport& report);

}  // namespace uavplace
