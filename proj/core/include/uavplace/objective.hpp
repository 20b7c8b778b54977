#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "uavplace/geometry.hpp"
#include "uavplace/propagation.hpp"

namespace uavplace {

/// Link-budget inputs. Only needed when results are converted to power.
struct RadioConfig {
    double bandwidth_b = 0.0;  ///< Hz, shared by all users
    double rate_v = 0.0;       ///< bit/s required per user
    double noise_n = 0.0;      ///< W
    double p_t_max = 0.0;      ///< W
    int num_users_m = 0;

    void validate() const;
    /// 2^(v M / B) - 1. Throws ConfigError if the power of two overflows.
    double snr_factor() const;
    /// Largest total loss the power budget can serve: P_t,max / (snr_factor * N), in dB.
    double l_max_db() const;

    friend bool operator==(const RadioConfig&, const RadioConfig&) = default;
};

/// Box constraints on the UAV plus the total-loss cap.
struct SearchBounds {
    Vec3 lower{-1000.0, -1000.0, -1000.0};
    Vec3 upper{1000.0, 1000.0, 1000.0};
    double l_max = std::numeric_limits<double>::infinity();  ///< dB

    void validate() const;
    bool contains(const Vec3& p) const;

    friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

/// What the optimizer minimizes.
enum class CostUnit {
    DbSum,      ///< sum of per-user losses in dB
    LinearSum,  ///< sum of per-user losses as power ratios
};

std::string_view to_string(CostUnit unit);
std::optional<CostUnit> parse_cost_unit(std::string_view text);

struct CostReport {
    double total_loss_db = 0.0;
    std::vector<double> per_user_loss;  ///< dB, user order
    bool feasible = true;
    std::optional<double> total_power_w;
};

/// Evaluates every link and sums in ascending user order. Feasibility is
/// checked against `bounds` when given. Throws DegenerateLinkError.
CostReport total_loss(const UavPosition& uav, const UserSet& users, const Building& building,
                      const PathLossParams& params = {}, const LinkConventions& conventions = {},
                      const SearchBounds* bounds = nullptr);

double min_power_per_user(double loss_db, const RadioConfig& radio);
double total_power(const CostReport& report, const RadioConfig& radio);
/// Shannon rate of one user's B/M channel.
double rate(double loss_db, double p_t, const RadioConfig& radio);

using CostFunction = std::function<double(const UavPosition&)>;

/// Solver-facing cost: the dB or linear loss sum, or +infinity when the
/// point is out of bounds, exceeds l_max, or lands on a user.
class PlacementObjective {
public:
    PlacementObjective(UserSet users, Building building, PathLossParams params = {},
                       SearchBounds bounds = {}, LinkConventions conventions = {},
                       CostUnit unit = CostUnit::DbSum);

    double operator()(const UavPosition& uav) const;
    CostReport report(const UavPosition& uav) const;

    const UserSet& users() const { return users_; }
    const Building& building() const { return building_; }
    const SearchBounds& bounds() const { return bounds_; }
    CostUnit unit() const { return unit_; }

private:
    UserSet users_;
    Building building_;
    PathLossParams params_;
    SearchBounds bounds_;
    LinkConventions conventions_;
    CostUnit unit_;
};

}  // namespace uavplace
