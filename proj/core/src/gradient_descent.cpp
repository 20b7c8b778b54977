#include <cmath>
#include <limits>

#include "uavplace/error.hpp"
#include "uavplace/solvers.hpp"

namespace uavplace {

void GdConfig::validate() const {
    if (max_iter < 0) throw ConfigError("gd max_iter must be non-negative");
    if (!(step_tol > 0.0) || !(fd_step > 0.0) || !(initial_step > 0.0)) {
        throw ConfigError("gd step_tol, fd_step and initial_step must be positive");
    }
    if (!(armijo > 0.0 && armijo < 1.0)) throw ConfigError("gd armijo constant must lie in (0, 1)");
    if (max_halvings < 1) throw ConfigError("gd max_halvings must be at least 1");
}

PlacementResult gd_solve(const CostFunction& cost, const UavPosition& start,
                         const GdConfig& config) {
    config.validate();
    PlacementResult result;
    result.solver = SolverKind::GradientDescent;

    auto eval = [&](const Vec3& p) {
        ++result.evaluations;
        return cost(p);
    };

    Vec3 x = start;
    double fx = eval(x);
    if (!std::isfinite(fx)) throw InitializationError("gradient descent start point has no finite cost");
    result.trace.push_back({0, fx});

    for (int it = 1; it <= config.max_iter; ++it) {
        Vec3 grad{};
        for (std::size_t d = 0; d < 3; ++d) {
            if (!config.active[d]) continue;
            Vec3 ahead = x;
            Vec3 behind = x;
            ahead[d] += config.fd_step;
            behind[d] -= config.fd_step;
            const double fa = eval(ahead);
            const double fb = eval(behind);
            if (std::isfinite(fa) && std::isfinite(fb)) {
                grad[d] = (fa - fb) / (2.0 * config.fd_step);
            } else if (std::isfinite(fa)) {
                grad[d] = (fa - fx) / config.fd_step;
            } else if (std::isfinite(fb)) {
                grad[d] = (fx - fb) / config.fd_step;
            }
        }
        const double grad_sq = grad.x * grad.x + grad.y * grad.y + grad.z * grad.z;
        if (grad_sq == 0.0) break;

        double alpha = config.initial_step;
        bool accepted = false;
        Vec3 candidate;
        double f_candidate = 0.0;
        for (int h = 0; h < config.max_halvings; ++h) {
            candidate = x - alpha * grad;
            f_candidate = eval(candidate);
            if (f_candidate <= fx - config.armijo * alpha * grad_sq) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            result.stagnated = true;
            break;
        }

        const double step = alpha * std::sqrt(grad_sq);
        x = candidate;
        fx = f_candidate;
        result.trace.push_back({it, fx});
        if (step < config.step_tol) break;
    }

    result.best_location = x;
    result.best_cost = fx;
    return result;
}

}  // namespace uavplace
