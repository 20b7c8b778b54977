#include "uavplace/propagation.hpp"

#include <cmath>
#include <numbers>

#include "uavplace/error.hpp"

namespace uavplace {

void PathLossParams::validate() const {
    for (double v : {w, g1, g2, g3, g4, f_ghz}) {
        if (!std::isfinite(v)) throw ConfigError("path-loss parameters must be finite");
    }
    if (!(f_ghz > 0.0)) throw ConfigError("carrier frequency must be positive");
}

double free_space_loss(double d_3d, const PathLossParams& params) {
    if (!(d_3d > 0.0)) throw DomainError("free-space loss needs d_3d > 0");
    return params.w * std::log10(d_3d) + params.w * std::log10(params.f_ghz) + params.g1;
}

double building_penetration_loss(double theta_deg, const PathLossParams& params) {
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0)) {
        throw DomainError("incident angle must lie in [0, 90] degrees");
    }
    const double one_minus_cos = 1.0 - std::cos(theta_deg * (std::numbers::pi / 180.0));
    return params.g2 + params.g3 * one_minus_cos * one_minus_cos;
}

double indoor_loss(double d_2d, const PathLossParams& params) {
    if (!(d_2d >= 0.0)) throw DomainError("indoor distance must be non-negative");
    return params.g4 * d_2d;
}

LossBreakdown path_loss(const LinkGeometry& geom, const PathLossParams& params) {
    LossBreakdown out;
    out.l_f = free_space_loss(geom.d_3d, params);
    out.l_b = building_penetration_loss(geom.theta, params);
    out.l_i = indoor_loss(geom.d_2d, params);
    out.l_total = out.l_f + out.l_b + out.l_i;
    return out;
}

}  // namespace uavplace
