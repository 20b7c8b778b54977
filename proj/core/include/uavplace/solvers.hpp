#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "uavplace/geometry.hpp"
#include "uavplace/objective.hpp"

namespace uavplace {

enum class SolverKind { Pso, GradientDescent, Grid };

std::string_view to_string(SolverKind kind);
std::optional<SolverKind> parse_solver_kind(std::string_view text);

struct TracePoint {
    int iteration = 0;
    double best_cost = 0.0;
};

struct PlacementResult {
    SolverKind solver = SolverKind::Pso;
    Vec3 best_location;
    double best_cost = 0.0;
    /// Global best after each iteration; entry 0 is the starting state.
    std::vector<TracePoint> trace;
    long long evaluations = 0;
    /// Gradient descent only: the line search gave up before step_tol was met.
    bool stagnated = false;
};

// ---------------------------------------------------------------------------
// Particle swarm with Clerc-Kennedy constriction.

struct Constriction {
    double chi = 0.0;
    double w = 0.0;   ///< inertia weight
    double c1 = 0.0;  ///< personal learning coefficient
    double c2 = 0.0;  ///< global learning coefficient
};

/// chi = 2 kappa / |2 - phi - sqrt(phi^2 - 4 phi)| with phi = phi1 + phi2.
/// Throws ConfigError unless phi > 4.
Constriction constriction(double kappa, double phi1, double phi2);

struct PsoConfig {
    double kappa = 1.0;
    double phi1 = 2.05;
    double phi2 = 2.05;
    int npop = 50;
    int maxit = 50;
    Vec3 varmin{-1000.0, -1000.0, -1000.0};
    Vec3 varmax{1000.0, 1000.0, 1000.0};
    std::uint64_t seed = 1;

    void validate() const;
    Constriction coefficients() const { return constriction(kappa, phi1, phi2); }

    friend bool operator==(const PsoConfig&, const PsoConfig&) = default;
};

struct Particle {
    Vec3 location;
    Vec3 velocity;
    double cost = 0.0;
    Vec3 best_location;
    double best_cost = 0.0;
};

/// Runs `maxit` swarm iterations. Locations leaving [varmin, varmax] are
/// clamped to the violated bound and that velocity component is zeroed.
/// Deterministic for a given seed; see rng.hpp for the stream layout.
PlacementResult pso_solve(const CostFunction& cost, const PsoConfig& config);

// ---------------------------------------------------------------------------
// Finite-difference gradient descent baseline.

struct GdConfig {
    int max_iter = 100;
    double step_tol = 0.01;     ///< metres
    double fd_step = 0.1;       ///< central-difference half width, metres
    double initial_step = 1.0;  ///< line search starts at alpha = initial_step
    double armijo = 1e-4;
    int max_halvings = 60;
    /// Axes the descent may move along; the others stay at the start value.
    std::array<bool, 3> active{true, true, true};

    void validate() const;
    friend bool operator==(const GdConfig&, const GdConfig&) = default;
};

/// Throws InitializationError when the start point has no finite cost.
PlacementResult gd_solve(const CostFunction& cost, const UavPosition& start,
                         const GdConfig& config = {});

// ---------------------------------------------------------------------------
// Exhaustive lattice search, used as the reference answer in tests.

inline constexpr unsigned long long kDefaultGridBudget = 50'000'000ULL;

/// Number of lattice points per axis: floor((upper - lower) / resolution) + 1.
std::array<long long, 3> lattice_shape(const SearchBounds& bounds, double resolution);

/// Evaluates every point lower + k * resolution inside `bounds` (x outermost)
/// and keeps the first strict minimum, which is the lexicographically
/// smallest among ties. Throws BudgetError if the lattice is too large.
PlacementResult grid_solve(const CostFunction& cost, const SearchBounds& bounds,
                           double resolution,
                           unsigned long long budget = kDefaultGridBudget);

/// Coarse lattice over the whole box, then the fine lattice in a window of
/// +-`window` metres around the coarse winner. `coarse` must be an integer
/// multiple of `fine` so every candidate is a point of the fine lattice.
PlacementResult grid_refine_solve(const CostFunction& cost, const SearchBounds& bounds,
                                  double coarse, double fine, double window,
                                  unsigned long long budget = kDefaultGridBudget);

}  // namespace uavplace
