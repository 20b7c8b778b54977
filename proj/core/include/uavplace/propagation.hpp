#pragma once

#include "uavplace/geometry.hpp"

namespace uavplace {

/// Coefficients of the ITU outdoor-to-indoor model. Defaults are the
/// standard 2 GHz values.
struct PathLossParams {
    double w = 20.0;    ///< distance/frequency slope
    double g1 = 32.4;   ///< dB
    double g2 = 14.0;   ///< dB, perpendicular penetration loss
    double g3 = 15.0;   ///< dB, additional loss at grazing incidence
    double g4 = 0.5;    ///< dB per metre indoors
    double f_ghz = 2.0;

    void validate() const;
    friend bool operator==(const PathLossParams&, const PathLossParams&) = default;
};

struct LossBreakdown {
    double l_f = 0.0;
    double l_b = 0.0;
    double l_i = 0.0;
    double l_total = 0.0;
};

double free_space_loss(double d_3d, const PathLossParams& params = {});
double building_penetration_loss(double theta_deg, const PathLossParams& params = {});
double indoor_loss(double d_2d, const PathLossParams& params = {});

/// l_total = (l_f + l_b) + l_i, always in that order.
LossBreakdown path_loss(const LinkGeometry& geom, const PathLossParams& params = {});

}  // namespace uavplace
