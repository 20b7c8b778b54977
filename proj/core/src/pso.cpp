#include "uavplace/solvers.hpp"

#include <cmath>
#include <limits>

#include "uavplace/error.hpp"
#include "uavplace/rng.hpp"

namespace uavplace {

std::string_view to_string(SolverKind kind) {
    switch (kind) {
        case SolverKind::Pso: return "pso";
        case SolverKind::GradientDescent: return "gd";
        case SolverKind::Grid: return "grid";
    }
    return "?";
}

std::optional<SolverKind> parse_solver_kind(std::string_view text) {
    if (text == "pso") return SolverKind::Pso;
    if (text == "gd") return SolverKind::GradientDescent;
    if (text == "grid") return SolverKind::Grid;
    return std::nullopt;
}

Constriction constriction(double kappa, double phi1, double phi2) {
    const double phi = phi1 + phi2;
    if (!(phi > 4.0)) throw ConfigError("constriction needs phi1 + phi2 > 4");
    Constriction c;
    c.chi = 2.0 * kappa / std::abs(2.0 - phi - std::sqrt(phi * phi - 4.0 * phi));
    c.w = c.chi;
    c.c1 = c.chi * phi1;
    c.c2 = c.chi * phi2;
    return c;
}

void PsoConfig::validate() const {
    (void)coefficients();
    if (npop < 1) throw ConfigError("npop must be at least 1");
    if (maxit < 0) throw ConfigError("maxit must be non-negative");
    for (std::size_t d = 0; d < 3; ++d) {
        if (!(varmin[d] < varmax[d])) throw ConfigError("varmin must be below varmax");
    }
}

namespace {

double evaluate(const CostFunction& cost, const Vec3& p, long long& evaluations) {
    ++evaluations;
    const double c = cost(p);
    return std::isnan(c) ? std::numeric_limits<double>::infinity() : c;
}

}  // namespace

PlacementResult pso_solve(const CostFunction& cost, const PsoConfig& config) {
    config.validate();
    const Constriction k = config.coefficients();

    PlacementResult result;
    result.solver = SolverKind::Pso;

    Vec3 global_best_location;
    double global_best_cost = std::numeric_limits<double>::infinity();

    std::vector<Particle> swarm(static_cast<std::size_t>(config.npop));
    StreamRng init_rng(config.seed, kPsoInitStream);
    for (Particle& p : swarm) {
        for (std::size_t d = 0; d < 3; ++d) {
            p.location[d] = init_rng.uniform(config.varmin[d], config.varmax[d]);
        }
        p.velocity = {};
        p.cost = evaluate(cost, p.location, result.evaluations);
        p.best_location = p.location;
        p.best_cost = p.cost;
        if (p.best_cost < global_best_cost) {
            global_best_cost = p.best_cost;
            global_best_location = p.best_location;
        }
    }
    if (!std::isfinite(global_best_cost)) {
        throw InitializationError("no initial particle has a finite cost");
    }
    result.trace.push_back({0, global_best_cost});

    for (int t = 1; t <= config.maxit; ++t) {
        StreamRng rng(config.seed, kPsoIterationStream + static_cast<std::uint64_t>(t));
        for (Particle& p : swarm) {
            std::array<double, 3> r1{};
            std::array<double, 3> r2{};
            for (double& r : r1) r = rng.uniform();
            for (double& r : r2) r = rng.uniform();

            for (std::size_t d = 0; d < 3; ++d) {
                p.velocity[d] = k.w * p.velocity[d] +
                                k.c1 * r1[d] * (p.best_location[d] - p.location[d]) +
                                k.c2 * r2[d] * (global_best_location[d] - p.location[d]);
                p.location[d] += p.velocity[d];
                if (p.location[d] < config.varmin[d]) {
                    p.location[d] = config.varmin[d];
                    p.velocity[d] = 0.0;
                } else if (p.location[d] > config.varmax[d]) {
                    p.location[d] = config.varmax[d];
                    p.velocity[d] = 0.0;
                }
            }

            p.cost = evaluate(cost, p.location, result.evaluations);
            if (p.cost < p.best_cost) {
                p.best_location = p.location;
                p.best_cost = p.cost;
                if (p.best_cost < global_best_cost) {
                    global_best_cost = p.best_cost;
                    global_best_location = p.best_location;
                }
            }
        }
        result.trace.push_back({t, global_best_cost});
    }

    result.best_location = global_best_location;
    result.best_cost = global_best_cost;
    return result;
}

}  // namespace uavplace
