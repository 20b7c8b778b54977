#include <algorithm>
#include <cmath>
#include <limits>

#include "uavplace/error.hpp"
#include "uavplace/solvers.hpp"

namespace uavplace {

namespace {

using Index3 = std::array<long long, 3>;

// Scans lattice indices k_lo..k_hi (inclusive, stepping by `stride`) of the
// lattice origin + k * spacing. x is the outermost loop, so the first strict
// minimum is also the lexicographically smallest one.
void scan(const CostFunction& cost, const Vec3& origin, double spacing, const Index3& k_lo,
          const Index3& k_hi, long long stride, PlacementResult& result) {
    for (long long i = k_lo[0]; i <= k_hi[0]; i += stride) {
        const double x = origin.x + static_cast<double>(i) * spacing;
        for (long long j = k_lo[1]; j <= k_hi[1]; j += stride) {
            const double y = origin.y + static_cast<double>(j) * spacing;
            for (long long k = k_lo[2]; k <= k_hi[2]; k += stride) {
                const Vec3 p{x, y, origin.z + static_cast<double>(k) * spacing};
                ++result.evaluations;
                const double c = cost(p);
                if (c < result.best_cost) {
                    result.best_cost = c;
                    result.best_location = p;
                }
            }
        }
        result.trace.push_back({static_cast<int>(result.trace.size()), result.best_cost});
    }
}

unsigned long long count_points(const Index3& lo, const Index3& hi, long long stride) {
    unsigned long long total = 1;
    for (std::size_t d = 0; d < 3; ++d) {
        total *= static_cast<unsigned long long>((hi[d] - lo[d]) / stride + 1);
    }
    return total;
}

PlacementResult empty_grid_result(const SearchBounds& bounds) {
    PlacementResult result;
    result.solver = SolverKind::Grid;
    result.best_cost = std::numeric_limits<double>::infinity();
    result.best_location = bounds.lower;
    return result;
}

}  // namespace

std::array<long long, 3> lattice_shape(const SearchBounds& bounds, double resolution) {
    if (!(resolution > 0.0)) throw ConfigError("grid resolution must be positive");
    bounds.validate();
    std::array<long long, 3> shape{};
    for (std::size_t d = 0; d < 3; ++d) {
        const double span = (bounds.upper[d] - bounds.lower[d]) / resolution;
        if (!(span < 9.0e15)) throw ConfigError("grid resolution too fine for the bounds");
        shape[d] = static_cast<long long>(std::floor(span + 1e-9)) + 1;
    }
    return shape;
}

PlacementResult grid_solve(const CostFunction& cost, const SearchBounds& bounds,
                           double resolution, unsigned long long budget) {
    const auto shape = lattice_shape(bounds, resolution);
    const Index3 lo{0, 0, 0};
    const Index3 hi{shape[0] - 1, shape[1] - 1, shape[2] - 1};
    const unsigned long long required = count_points(lo, hi, 1);
    if (required > budget) throw BudgetError(required, budget);

    PlacementResult result = empty_grid_result(bounds);
    scan(cost, bounds.lower, resolution, lo, hi, 1, result);
    return result;
}

PlacementResult grid_refine_solve(const CostFunction& cost, const SearchBounds& bounds,
                                  double coarse, double fine, double window,
                                  unsigned long long budget) {
    const auto shape = lattice_shape(bounds, fine);
    if (!(coarse >= fine)) throw ConfigError("coarse resolution must not be finer than fine");
    const double ratio = coarse / fine;
    const long long stride = std::llround(ratio);
    if (std::abs(ratio - static_cast<double>(stride)) > 1e-9 * ratio) {
        throw ConfigError("coarse resolution must be an integer multiple of the fine one");
    }
    if (!(window >= 0.0)) throw ConfigError("refinement window must be non-negative");

    const Index3 all_lo{0, 0, 0};
    const Index3 all_hi{shape[0] - 1, shape[1] - 1, shape[2] - 1};
    const long long half = static_cast<long long>(std::floor(window / fine + 1e-9));
    const unsigned long long window_points =
        static_cast<unsigned long long>(2 * half + 1) * (2 * half + 1) * (2 * half + 1);
    const unsigned long long required = count_points(all_lo, all_hi, stride) + window_points;
    if (required > budget) throw BudgetError(required, budget);

    PlacementResult result = empty_grid_result(bounds);
    scan(cost, bounds.lower, fine, all_lo, all_hi, stride, result);
    if (!std::isfinite(result.best_cost)) return result;

    Index3 lo{};
    Index3 hi{};
    for (std::size_t d = 0; d < 3; ++d) {
        const long long centre =
            std::llround((result.best_location[d] - bounds.lower[d]) / fine);
        lo[d] = std::max(0LL, centre - half);
        hi[d] = std::min(all_hi[d], centre + half);
    }
    // The coarse winner is itself in the window, so the fine pass can only
    // improve on it; restart the scan so ties resolve lexicographically.
    PlacementResult refined = empty_grid_result(bounds);
    refined.evaluations = result.evaluations;
    refined.trace = std::move(result.trace);
    const std::size_t coarse_entries = refined.trace.size();
    scan(cost, bounds.lower, fine, lo, hi, 1, refined);
    for (std::size_t i = coarse_entries; i < refined.trace.size(); ++i) {
        refined.trace[i].best_cost = std::min(refined.trace[i].best_cost, result.best_cost);
    }
    return refined;
}

}  // namespace uavplace
